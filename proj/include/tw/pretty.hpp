#pragma once

#include <string>

#include "tw/syntax.hpp"

namespace tw {

struct PrettyOptions {
  // print full succ-of-zero chains as decimal literals
  bool numeric_literals = true;
};

/// Render a well-scoped term in surface syntax. Binder names are generated
/// deterministically by depth (x0, x1, ...). The output reparses to a
/// structurally identical term.
std::string pretty(const Term& term, PrettyOptions options = {});

}  // namespace tw
