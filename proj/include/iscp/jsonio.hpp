#ifndef ISCP_JSONIO_HPP
#define ISCP_JSONIO_HPP

#include <memory>
#include <string>

#include "json.hpp"

#include "iscp/act.hpp"
#include "iscp/fdalg.hpp"
#include "iscp/gpdalg.hpp"
#include "iscp/xprod.hpp"

namespace iscp::io {

using json = nlohmann::json;

json report_to_json(const ValidationReport& rep);

json semigroup_to_json(const isg::InverseSemigroup& s);
/// Accepts either the explicit table form or the partial-bijection
/// generator form (points are 1-based in the JSON).
std::shared_ptr<const isg::InverseSemigroup> semigroup_from_json(const json& j, int cap = 10000);

json space_to_json(const topo::FiniteSpace& x);
topo::FiniteSpace space_from_json(const json& j);

json action_to_json(const act::SpaceAction& a);
act::SpaceAction action_from_json(const json& j, int cap = 10000);

json groupoid_to_json(const act::GermGroupoid& g);

json element_to_json(const fd::AlgElement& e);
fd::AlgElement element_from_json(const fd::FdAlgebra& a, const json& j);

json fd_action_to_json(const fd::PartialIsoAction& a);
fd::PartialIsoAction fd_action_from_json(const json& j, int cap = 10000);

json crossed_to_json(const xp::CrossedElement& x);
xp::CrossedElement crossed_from_json(const fd::PartialIsoAction& a, const json& j);

}  // namespace iscp::io

#endif
