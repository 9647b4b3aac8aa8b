#pragma once

// Umbrella header: the whole library in one include.

#include "cyclic.hpp"
#include "errors.hpp"
#include "factory.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "ramsey.hpp"
