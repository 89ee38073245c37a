#pragma once

#include "permutation.hpp"
#include "hook.hpp"
#include "mpoly.hpp"
#include "ratfn.hpp"
#include "series.hpp"
#include "enumerate.hpp"
#include "format.hpp"
#include "report.hpp"
#include "formulas.hpp"
#include "verify.hpp"
