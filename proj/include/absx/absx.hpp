#pragma once

#include "absx/abs_index.hpp"
#include "absx/canonical.hpp"
#include "absx/enumerator.hpp"
#include "absx/errors.hpp"
#include "absx/extremal.hpp"
#include "absx/families.hpp"
#include "absx/graph.hpp"
#include "absx/graph_io.hpp"
#include "absx/invariants.hpp"
#include "absx/lemmas.hpp"
#include "absx/verifier.hpp"
