#ifndef FANO_ERRORS_HPP
#define FANO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fano {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct degree_bound_error : error {
    explicit degree_bound_error(const std::string& msg) : error(msg) {}
};

struct singular_matrix_error : error {
    explicit singular_matrix_error(const std::string& msg) : error(msg) {}
};

struct parse_error : error {
    parse_error(const std::string& msg, int line, int col)
        : error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line, col;
};

struct rewrite_error : error {
    explicit rewrite_error(const std::string& msg) : error(msg) {}
};

// Sanity checks that stay active in release builds; failures indicate broken
// invariants, not user input problems.
#define FANO_CHECK(cond, msg) \
    do { if (!(cond)) throw ::fano::error(std::string("internal check failed: ") + (msg)); } while (0)

} // namespace fano

#endif
