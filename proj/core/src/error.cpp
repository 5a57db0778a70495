#include "revid/error.hpp"

namespace revid {

namespace {

std::string locate(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(locate(message, line, column)), line_(line), column_(column) {}

MissingCost::MissingCost(std::size_t controls)
    : Error("no quantum cost entry for a gate with " + std::to_string(controls) +
            " controls; extend the cost table"),
      controls_(controls) {}

}  // namespace revid
