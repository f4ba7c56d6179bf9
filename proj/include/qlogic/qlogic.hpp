#pragma once

#include "bits.hpp"
#include "document.hpp"
#include "dot.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "frames.hpp"
#include "lattice.hpp"
#include "monadic.hpp"
#include "parallel.hpp"
#include "quasi_implication.hpp"
#include "report.hpp"
