#pragma once

#include "betti.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "monomial.hpp"
#include "serialize.hpp"
#include "splitting.hpp"
#include "version.hpp"
