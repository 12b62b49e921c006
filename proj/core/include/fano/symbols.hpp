#ifndef FANO_SYMBOLS_HPP
#define FANO_SYMBOLS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fano {

using VarId = std::uint32_t;

// Process-wide interned symbol names. Ids are assigned in first-use order, so
// any single run is deterministic as long as symbols are introduced in a fixed
// order (scenario files declare their variables up front).
VarId intern_symbol(const std::string& name);
const std::string& symbol_name(VarId id);
bool symbol_exists(const std::string& name);

} // namespace fano

#endif
