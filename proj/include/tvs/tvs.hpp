#pragma once

#include "tvs/bounds.hpp"
#include "tvs/completion.hpp"
#include "tvs/constructors.hpp"
#include "tvs/families.hpp"
#include "tvs/graph.hpp"
#include "tvs/io.hpp"
#include "tvs/oracle.hpp"
#include "tvs/partitions.hpp"
#include "tvs/small_fixtures.hpp"
