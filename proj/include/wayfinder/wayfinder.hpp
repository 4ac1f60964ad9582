#pragma once

#include "wayfinder/analysis.hpp"
#include "wayfinder/dijkstra.hpp"
#include "wayfinder/edge_list.hpp"
#include "wayfinder/error.hpp"
#include "wayfinder/graph.hpp"
#include "wayfinder/json_io.hpp"
#include "wayfinder/mapkit.hpp"
#include "wayfinder/planners.hpp"
#include "wayfinder/render.hpp"
#include "wayfinder/session.hpp"
