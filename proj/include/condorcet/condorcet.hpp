// condorcet.hpp -- umbrella header

#pragma once

#define CONDORCET_VERSION "1.0.0"

#include "core.hpp"
#include "domain.hpp"
#include "io.hpp"
#include "iso.hpp"
#include "lexcode.hpp"
#include "oracle.hpp"
#include "search.hpp"
