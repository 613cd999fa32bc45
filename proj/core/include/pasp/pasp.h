#pragma once

#include "pasp/baseline.h"
#include "pasp/certainty.h"
#include "pasp/classical.h"
#include "pasp/constraint.h"
#include "pasp/error.h"
#include "pasp/kernel.h"
#include "pasp/limits.h"
#include "pasp/literal.h"
#include "pasp/logic.h"
#include "pasp/newsem.h"
#include "pasp/parser.h"
#include "pasp/printer.h"
#include "pasp/program.h"
#include "pasp/qbf.h"
#include "pasp/reduct.h"
#include "pasp/strong.h"
#include "pasp/valuation.h"
#include "pasp/weak.h"
