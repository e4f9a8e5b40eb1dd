#pragma once

#include <string>

#include "monoconv/measures.hpp"
#include "monoconv/semigroup.hpp"

namespace monoconv {

// JSON text in and out. Field names follow the published schema:
//   {"kind":"atomic","atoms":[[x,w],...]}
//   {"kind":"grid","xs":[...],"density":[...],"atoms":[[x,w],...]}
//   {"kind":"family","name":...,"params":{...}}
//   triples: {"gamma":g,"tau":<measure>}

Measure measure_from_json(const std::string& text);
std::string measure_to_json(const Measure& m, int indent = -1);

struct Triple {
    double gamma = 0.0;
    Measure tau = AtomicMeasure{};
};

Triple triple_from_json(const std::string& text);
std::string triple_to_json(const Triple& t, int indent = -1);

}  // namespace monoconv
