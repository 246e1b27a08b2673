#pragma once

#include "basel/constants.hpp"
#include "basel/double_double.hpp"
#include "basel/ledger.hpp"
#include "basel/quad1d.hpp"
#include "basel/quad2d.hpp"
#include "basel/related_proofs.hpp"
#include "basel/series.hpp"
#include "basel/transforms.hpp"
#include "basel/types.hpp"
#include "basel/version.hpp"
