#pragma once

#include "shinglesim/error.hpp"
#include "shinglesim/minhash.hpp"
#include "shinglesim/random_baseline.hpp"
#include "shinglesim/report.hpp"
#include "shinglesim/representation.hpp"
#include "shinglesim/sampling.hpp"
#include "shinglesim/seeding.hpp"
#include "shinglesim/shingling.hpp"
#include "shinglesim/similarity_exact.hpp"
#include "shinglesim/text_ingest.hpp"
