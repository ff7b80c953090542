#pragma once

// Umbrella header.

#include "sfq/automorphism.hpp"
#include "sfq/catalogue.hpp"
#include "sfq/cli.hpp"
#include "sfq/finite_group.hpp"
#include "sfq/ints.hpp"
#include "sfq/low_index.hpp"
#include "sfq/presentation.hpp"
#include "sfq/quotient_set.hpp"
#include "sfq/seifert.hpp"
#include "sfq/semidirect.hpp"
#include "sfq/sfs_text.hpp"
#include "sfq/smith.hpp"
#include "sfq/words.hpp"
