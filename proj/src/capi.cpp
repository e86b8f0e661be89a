#include "gwcycle.h"

#include <atomic>
#include <cstring>
#include <string>

#include <json.hpp>

#include "gwcycle/cycle_classes.hpp"
#include "gwcycle/nef_cone.hpp"
#include "gwcycle/verify.hpp"

struct gw_space {
    gw::TargetSpace space;
};

namespace {

thread_local std::string g_last_error;
std::atomic<int> g_threads{1};

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
gw_status guarded(Fn&& fn) {
    try {
        fn();
        return GW_OK;
    } catch (const gw::domain_error& e) {
        g_last_error = e.what();
        return GW_ERR_DOMAIN;
    } catch (const gw::internal_error& e) {
        g_last_error = e.what();
        return GW_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GW_ERR_PARSE;
    }
}

} // namespace

extern "C" {

gw_space* gw_space_create(const char* name) {
    if (name == nullptr) {
        g_last_error = "null space name";
        return nullptr;
    }
    try {
        return new gw_space{gw::TargetSpace::parse(name)};
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

void gw_space_free(gw_space* space) { delete space; }

const char* gw_last_error(void) { return g_last_error.c_str(); }

void gw_string_free(char* s) { delete[] s; }

void gw_set_threads(int threads) { g_threads = threads < 1 ? 1 : threads; }

gw_status gw_qh_mult(const gw_space* space, const char* a, const char* b, char** out_json) {
    if (!space || !a || !b || !out_json) {
        g_last_error = "null argument";
        return GW_ERR_PARSE;
    }
    return guarded([&]() {
        gw::QhElement ea = gw::parse_class(space->space, a);
        gw::QhElement eb = gw::parse_class(space->space, b);
        gw::QhElement p = gw::star_product(space->space, ea, eb);
        nlohmann::json j;
        j["space"] = space->space.name();
        j["product"] = p.str();
        auto terms = nlohmann::json::array();
        for (const auto& t : p.terms())
            terms.push_back({{"qpow", t.qpow}, {"class", t.cls.str()}, {"coeff", t.coeff.str()}});
        j["terms"] = terms;
        *out_json = dup_string(j.dump());
    });
}

gw_status gw_npoint(const gw_space* space, int degree, const char* insertions, long long* out) {
    if (!space || !insertions || !out) {
        g_last_error = "null argument";
        return GW_ERR_PARSE;
    }
    return guarded([&]() {
        auto ins = gw::parse_class_list(space->space, insertions);
        *out = gw::npoint_codim0_int(space->space, degree, ins);
    });
}

gw_status gw_fourpoint(const gw_space* space, int degree, const char* insertions, long long* out) {
    if (!space || !insertions || !out) {
        g_last_error = "null argument";
        return GW_ERR_PARSE;
    }
    return guarded([&]() {
        auto ins = gw::parse_class_list(space->space, insertions);
        *out = gw::fourpoint_divisor(space->space, degree, ins);
    });
}

gw_status gw_fcurve_degree(const gw_space* space, int degree, const char* insertions,
                           const char* fcurve, long long* out) {
    if (!space || !insertions || !fcurve || !out) {
        g_last_error = "null argument";
        return GW_ERR_PARSE;
    }
    return guarded([&]() {
        auto ins = gw::parse_class_list(space->space, insertions);
        gw::FCurve f = gw::FCurve::parse(fcurve, static_cast<int>(ins.size()));
        gw::GwSpec spec{space->space, degree, ins, 1};
        *out = gw::fcurve_degree(spec, f);
    });
}

gw_status gw_divisor_class(const gw_space* space, int degree, const char* insertions,
                           char** out_json) {
    if (!space || !insertions || !out_json) {
        g_last_error = "null argument";
        return GW_ERR_PARSE;
    }
    return guarded([&]() {
        auto ins = gw::parse_class_list(space->space, insertions);
        gw::GwSpec spec{space->space, degree, ins, 1};
        gw::ClassVector v = gw::divisor_class(spec, g_threads.load());
        *out_json = dup_string(v.to_json());
    });
}

gw_status gw_pushforward(const gw_space* space, int degree, const char* insertions, int forget,
                         char** out_json) {
    if (!space || !insertions || !out_json) {
        g_last_error = "null argument";
        return GW_ERR_PARSE;
    }
    return guarded([&]() {
        auto ins = gw::parse_class_list(space->space, insertions);
        gw::GwSpec spec{space->space, degree, ins, 2};
        gw::ClassVector v = gw::pushforward_divisor(spec, forget, g_threads.load());
        *out_json = dup_string(v.to_json());
    });
}

gw_status gw_nef_check(const char* class_json, const char* rays_json, char** out_json) {
    if (!class_json || !out_json) {
        g_last_error = "null argument";
        return GW_ERR_PARSE;
    }
    return guarded([&]() {
        gw::ClassVector v = gw::ClassVector::from_json(class_json);
        gw::RayTable table =
            rays_json ? gw::RayTable::load_json(rays_json) : gw::RayTable::defaults(v.n);
        nlohmann::json j;
        j["n"] = v.n;
        j["nef"] = gw::is_nef(v);
        auto contracted = nlohmann::json::array();
        for (const auto& f : gw::all_fcurves(v.n))
            if (gw::pair_class_fcurve(v, f).is_zero()) contracted.push_back(f.str());
        j["contracted"] = contracted;
        auto dec = gw::decompose_in_rays(v, table);
        if (dec) {
            nlohmann::json d = nlohmann::json::object();
            for (const auto& [name, c] : *dec) d[name] = c.str();
            j["decomposition"] = d;
        } else {
            j["decomposition"] = nullptr;
        }
        *out_json = dup_string(j.dump());
    });
}

gw_status gw_verify(char** report_json, int* failures) {
    if (!report_json || !failures) {
        g_last_error = "null argument";
        return GW_ERR_PARSE;
    }
    return guarded([&]() {
        auto results = gw::run_verification();
        int bad = 0;
        for (const auto& r : results)
            if (!r.pass) ++bad;
        *failures = bad;
        *report_json = dup_string(gw::verification_report_json(results));
    });
}

} // extern "C"
