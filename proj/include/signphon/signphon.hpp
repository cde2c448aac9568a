#pragma once

// Umbrella header: pose ingestion, phonological descriptors, temporal
// segmentation, the phoneme distance metric, clustering, repeated-span
// discovery, and the synthetic-data generator.

#include "signphon/cluster.hpp"
#include "signphon/errors.hpp"
#include "signphon/io.hpp"
#include "signphon/metric.hpp"
#include "signphon/normalize.hpp"
#include "signphon/phonology.hpp"
#include "signphon/segment.hpp"
#include "signphon/seqmatch.hpp"
#include "signphon/synth.hpp"
#include "signphon/types.hpp"
#include "signphon/union_find.hpp"
