#ifndef MAXCUT_MAXCUT_HPP
#define MAXCUT_MAXCUT_HPP

#include "maxcut/block_cut.hpp"
#include "maxcut/bounds.hpp"
#include "maxcut/driver.hpp"
#include "maxcut/errors.hpp"
#include "maxcut/gen.hpp"
#include "maxcut/graph.hpp"
#include "maxcut/io.hpp"
#include "maxcut/oracle.hpp"
#include "maxcut/reconstruct.hpp"
#include "maxcut/reduce.hpp"
#include "maxcut/rules.hpp"
#include "maxcut/select.hpp"
#include "maxcut/ucf.hpp"

#endif
