#pragma once

#include "posetdet/chromatic.hpp"
#include "posetdet/det.hpp"
#include "posetdet/errors.hpp"
#include "posetdet/identities.hpp"
#include "posetdet/io.hpp"
#include "posetdet/lgv.hpp"
#include "posetdet/poset.hpp"
#include "posetdet/random.hpp"
#include "posetdet/report.hpp"
#include "posetdet/ring.hpp"
