#pragma once

#include "arboret/bitstring.hpp"
#include "arboret/codec.hpp"
#include "arboret/dist.hpp"
#include "arboret/double_node.hpp"
#include "arboret/entropy.hpp"
#include "arboret/enumerate.hpp"
#include "arboret/errors.hpp"
#include "arboret/experiment.hpp"
#include "arboret/frame.hpp"
#include "arboret/json_io.hpp"
#include "arboret/labeled.hpp"
#include "arboret/lz.hpp"
#include "arboret/lzpipe.hpp"
#include "arboret/ordered_tree.hpp"
#include "arboret/rng.hpp"
#include "arboret/sample.hpp"
