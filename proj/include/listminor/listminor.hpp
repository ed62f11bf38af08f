#pragma once

#include <listminor/bitset.hpp>
#include <listminor/graph.hpp>
#include <listminor/graph_io.hpp>
#include <listminor/parallel.hpp>
#include <listminor/minors.hpp>
#include <listminor/listcolor.hpp>
#include <listminor/construction/rational.hpp>
#include <listminor/construction/params.hpp>
#include <listminor/construction/bounds.hpp>
#include <listminor/construction/sampling.hpp>
#include <listminor/construction/gadget.hpp>
#include <listminor/construction/counterexample.hpp>
