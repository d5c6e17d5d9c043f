#pragma once

#include "longcycle/audit.hpp"
#include "longcycle/cycles.hpp"
#include "longcycle/enumerate.hpp"
#include "longcycle/error.hpp"
#include "longcycle/graph.hpp"
#include "longcycle/graph6.hpp"
#include "longcycle/instances.hpp"
#include "longcycle/scan.hpp"
#include "longcycle/search.hpp"
#include "longcycle/serialize.hpp"
#include "longcycle/spectral.hpp"
#include "longcycle/transforms.hpp"
