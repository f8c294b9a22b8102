#pragma once

#include "entailkit/corpus.hpp"
#include "entailkit/embedstore.hpp"
#include "entailkit/error.hpp"
#include "entailkit/evalharness.hpp"
#include "entailkit/features.hpp"
#include "entailkit/label.hpp"
#include "entailkit/learners/ensemble.hpp"
#include "entailkit/learners/model.hpp"
#include "entailkit/semrep.hpp"
#include "entailkit/textprep.hpp"
