#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tw/syntax.hpp"

namespace tw {

struct TypeError : std::runtime_error {
  TypeError(Span where, const std::string& message, std::optional<Type> expected = {},
            std::optional<Type> actual = {})
      : std::runtime_error(message), where(where), expected(std::move(expected)),
        actual(std::move(actual)) {}
  Span where;
  std::optional<Type> expected;
  std::optional<Type> actual;
};

/// Infer the unique simple type of `term` under `context`. The context is
/// ordered outermost-first: Var k refers to context[context.size() - 1 - k].
/// Throws TypeError on ill-typed or ill-scoped input.
Type typecheck(const Term& term, const std::vector<Type>& context = {});

}  // namespace tw
