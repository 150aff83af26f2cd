#pragma once

#include "constructions.hpp"
#include "graph.hpp"
#include "intervals.hpp"
#include "lp.hpp"
#include "pcg.hpp"
#include "rational.hpp"
#include "recognizer.hpp"
#include "shells.hpp"
#include "topology.hpp"
#include "tree.hpp"
