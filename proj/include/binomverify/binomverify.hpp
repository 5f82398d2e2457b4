#pragma once

// Umbrella header: the full library.

#include "rational.hpp"     // IWYU pragma: export
#include "binomial.hpp"     // IWYU pragma: export
#include "errors.hpp"       // IWYU pragma: export
#include "polynomial.hpp"   // IWYU pragma: export
#include "series.hpp"       // IWYU pragma: export
#include "identities.hpp"   // IWYU pragma: export
#include "dsl/ast.hpp"      // IWYU pragma: export
#include "dsl/parser.hpp"   // IWYU pragma: export
#include "dsl/eval.hpp"     // IWYU pragma: export
#include "dsl/verify.hpp"   // IWYU pragma: export
