#pragma once

#include "p5hom/vertex_set.hpp"
#include "p5hom/error.hpp"
#include "p5hom/graph.hpp"
#include "p5hom/cotree.hpp"
#include "p5hom/witness.hpp"
#include "p5hom/io.hpp"
#include "p5hom/detect.hpp"
#include "p5hom/oracle.hpp"
#include "p5hom/growth.hpp"
#include "p5hom/pair_finder.hpp"
#include "p5hom/extract.hpp"
#include "p5hom/generators.hpp"
#include "p5hom/bench.hpp"
#include "p5hom/verify.hpp"
