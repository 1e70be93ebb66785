#pragma once

#include "flagbal/combinat.hpp"
#include "flagbal/complex.hpp"
#include "flagbal/construct.hpp"
#include "flagbal/errors.hpp"
#include "flagbal/face.hpp"
#include "flagbal/graph.hpp"
#include "flagbal/graph_io.hpp"
#include "flagbal/revlex.hpp"
#include "flagbal/verify.hpp"
