#pragma once

#include <functional>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "rp3link/certificate.hpp"
#include "rp3link/constraints.hpp"
#include "rp3link/signing.hpp"

namespace rp3link {

/// Class oracle for rule checks: a concrete signing always answers; a
/// constraint system answers only for determined cycles.
using ClassEval = std::function<std::optional<Z2>(const Cycle&)>;

ClassEval eval_from_signing(const EdgeSigning& s);
ClassEval eval_from_constraints(const SignConstraints& sigma);

/// All vertex-disjoint pairs with both classes 1, in enumeration order.
std::vector<CertDisjointOnePair> disjoint_one_hom_pairs(const EdgeSigning& s,
                                                        const std::vector<Cycle>& cycles);

/// All pairwise vertex-disjoint triples with all classes 1.
std::vector<CertDisjointOneTriple> disjoint_one_hom_triples(const EdgeSigning& s,
                                                            const std::vector<Cycle>& cycles);

/// For every induced K6 of g and induced K4 inside it whose cycles are all
/// 0-homologous, a certificate that the K6 contains a link. Ordered by
/// (K6 vertex set, K4 vertex set).
std::vector<CertZeroHomK4InK6> zero_hom_k4_links(const EdgeSigning& s);

/// Composition check across every candidate pair of the link source. The
/// witness map gives, per candidate pair index, the proposed witness cycle.
/// Returns the certificate or the first failing pair with the failing
/// condition named. A single-pair source with an identical witness yields a
/// CertThreeChain.
std::variant<Certificate, Violation> ll_compose(
    const Graph& g, const ClassEval& classes, const LinkSource& source, const Cycle& external,
    LinkReason second_reason, const std::vector<Cycle>& witnesses,
    const std::string& second_assumption = "");

/// Checks one candidate pair with one witness; empty result means the row is
/// acceptable. Exposed for row-level reporting.
std::optional<std::string> ll_row_failure(const Graph& g, const ClassEval& classes,
                                          const std::pair<Cycle, Cycle>& pair,
                                          const Cycle& witness, const Cycle& external,
                                          LinkReason second_reason, int* ca_member_out = nullptr,
                                          IntersectionType* how_out = nullptr);

/// Homology-level linklessness conditions for a K6 signing:
///   (a) no disjoint triangle pair with both classes 1,
///   (b) no disjoint triangle pair with both classes 0,
///   (c) every K4 has an even, nonzero count of 1-homologous triangles.
/// Empty result = pass.
std::vector<Violation> linkless_k6_check(const EdgeSigning& s);

}  // namespace rp3link
