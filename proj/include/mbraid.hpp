#pragma once

#include "mbraid/dotted_bridge.hpp"
#include "mbraid/dynnikov.hpp"
#include "mbraid/group_table.hpp"
#include "mbraid/invariants.hpp"
#include "mbraid/marked.hpp"
#include "mbraid/presentation.hpp"
#include "mbraid/render.hpp"
#include "mbraid/report.hpp"
#include "mbraid/search.hpp"
#include "mbraid/token.hpp"
#include "mbraid/trace.hpp"
#include "mbraid/virtual_bridge.hpp"
#include "mbraid/word.hpp"
