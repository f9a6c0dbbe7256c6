#include "qcrank/json_io.hpp"

namespace qcrank {

namespace {

Json long_list(const std::vector<long>& values) {
    Json out = Json::array();
    for (long v : values) out.push_back(std::to_string(v));
    return out;
}

}  // namespace

Json tuple_json(const RaduTuple& t) {
    Json out;
    out["alpha"] = std::to_string(t.alpha);
    out["M"] = std::to_string(t.level());
    out["N"] = std::to_string(t.N);
    out["r"] = long_list(t.r.exponents());
    out["beta"] = std::to_string(t.beta);
    return out;
}

Json certificate_json(const Certificate& cert) {
    Json out;
    out["tuple"] = tuple_json(cert.tuple);
    out["a"] = long_list(cert.a.values());
    out["kappa"] = std::to_string(cert.kappa_value);
    out["pi"] = Json::array({std::to_string(cert.pi.first), std::to_string(cert.pi.second)});
    out["orbit"] = long_list(cert.orbit);
    out["beta_min"] = std::to_string(cert.beta_min);
    Json reps = Json::array();
    for (const auto& rep : cert.reps)
        reps.push_back(Json::array({std::to_string(rep.a), std::to_string(rep.b),
                                    std::to_string(rep.c), std::to_string(rep.d)}));
    out["reps"] = reps;
    Json pvals = Json::array();
    for (std::size_t i = 0; i < cert.p_values.size(); ++i) {
        Json pv;
        pv["rep_index"] = std::to_string(i);
        pv["p_lower"] = to_fraction(cert.p_values[i].lower);
        pv["p_star"] = to_fraction(cert.p_values[i].star);
        pvals.push_back(pv);
    }
    out["p_values"] = pvals;
    out["nu"] = to_fraction(cert.nu);
    out["nu_floor"] = std::to_string(cert.nu_floor);
    Json checked = Json::array();
    for (const auto& c : cert.checked) {
        Json entry;
        entry["beta"] = std::to_string(c.beta);
        entry["n"] = std::to_string(c.n);
        entry["value"] = c.value.get_str();
        checked.push_back(entry);
    }
    out["checked"] = checked;
    out["verdict"] = cert.proven ? "proven" : "failed";
    if (!cert.proven) out["failure"] = cert.failure;
    return out;
}

Json reduction_json(const ReductionResult& red) {
    Json out;
    out["M"] = std::to_string(red.spec.level());
    out["r"] = long_list(red.spec.exponents());
    out["j"] = std::to_string(red.j);
    out["verified_to"] = std::to_string(red.verified_to);
    return out;
}

Json report_json(const VerificationReport& report) {
    Json out;
    out["t"] = std::to_string(report.t);
    out["explained"] = long_list(report.explained);
    out["unexplained_vanishing"] = long_list(report.unexplained_vanishing);
    Json certs = Json::array();
    for (const auto& cert : report.certificates) certs.push_back(certificate_json(cert));
    out["certificates"] = certs;
    if (report.reduction) out["reduction"] = reduction_json(*report.reduction);
    out["direct_check_bound"] = std::to_string(report.direct_check_bound);
    out["theorem_match"] = report.theorem_match;
    return out;
}

}  // namespace qcrank
