#pragma once

#include "brieskorn/equivariant.hpp"
#include "brieskorn/invariants.hpp"
#include "brieskorn/knots.hpp"
#include "brieskorn/lattice.hpp"
#include "brieskorn/obstruct.hpp"
#include "brieskorn/seifert.hpp"

#include <json.hpp>

namespace brieskorn::json_io {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& v);   // number when it fits in 64 bits, else string
Json to_json(const IntVector& v);
Json to_json(const IntegerMatrix& m);
Json to_json(const exact::Inertia& s);
Json to_json(const seifert::BrieskornTriple& t);
Json to_json(const seifert::SeifertData& d);
Json to_json(const seifert::MontesinosParameters& m);
Json to_json(const plumbing::PlumbingGraph& g);
Json to_json(const plumbing::WuClass& w);
Json to_json(const lattice::DiagonalEmbedding& e);
Json to_json(const lattice::EntryProfile& p);
Json to_json(const invariants::BoundingReport& r);
Json to_json(const equivariant::FixedPointCensus& c);
Json to_json(const equivariant::FixedSphereClass& f);
Json to_json(const knots::FoxMilnorResult& r);
Json to_json(const knots::SliceObstructionReport& r);
Json to_json(const obstruct::ObstructionCertificate& c);
Json to_json(const obstruct::PipelineReport& r);

IntegerMatrix matrix_from_json(const Json& j);

} // namespace brieskorn::json_io
