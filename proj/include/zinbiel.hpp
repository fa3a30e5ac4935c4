#pragma once

#include "zinbiel/scalar.hpp"
#include "zinbiel/matrix.hpp"
#include "zinbiel/report.hpp"
#include "zinbiel/algebra.hpp"
#include "zinbiel/tensor.hpp"
#include "zinbiel/representation.hpp"
#include "zinbiel/matched_pair.hpp"
#include "zinbiel/bialgebra.hpp"
#include "zinbiel/yang_baxter.hpp"
#include "zinbiel/double.hpp"
#include "zinbiel/rota_baxter.hpp"
#include "zinbiel/search.hpp"
#include "zinbiel/io.hpp"
#include "zinbiel/corpus.hpp"
