#pragma once

#include <json.hpp>
#include <string>

#include "lpdo/classify.hpp"
#include "lpdo/diffop.hpp"
#include "lpdo/laplace.hpp"
#include "lpdo/newton.hpp"

namespace lpdo {

using Json = nlohmann::json;

Json json_of(const Rational& r);
Json json_of(const RatFunc& f);
Json json_of(const DiffOp& p);
Json json_of(const BinaryForm& f);
Json json_of(const Mat2& m);
Json json_of(const Edge& e);
Json json_of(const NewtonPolygon& np);
Json json_of(const ChainStep& s);
Json json_of(const LaplaceChain& ch);
Json json_of(const LaplaceDivisor& d);
Json json_of(const DivisorDiagnosis& d);
Json json_of(const OveridealResult& o);
Json json_of(const FirstStep& fs);
Json json_of(const NormalizedForm& nf);
Json json_of(const MultiplicityPattern& mp);
/// Everything except the evidence list, which the envelope carries separately.
Json json_of(const ClassificationReport& rep);
Json json_of(const WitnessCheck& wc);

/// Fixed response shape shared by all subcommands. The serializer orders
/// keys, so equal content dumps to byte-identical text.
Json envelope(const std::string& command, Json input, Json result, Json evidence,
              Json citations, Json diagnostics);

}  // namespace lpdo
