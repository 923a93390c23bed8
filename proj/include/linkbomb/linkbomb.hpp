#ifndef LINKBOMB_LINKBOMB_HPP
#define LINKBOMB_LINKBOMB_HPP

#include "linkbomb/attack.hpp"
#include "linkbomb/disguise.hpp"
#include "linkbomb/experiment.hpp"
#include "linkbomb/flow.hpp"
#include "linkbomb/format.hpp"
#include "linkbomb/generators.hpp"
#include "linkbomb/graph.hpp"
#include "linkbomb/pagerank.hpp"

#endif // LINKBOMB_LINKBOMB_HPP
