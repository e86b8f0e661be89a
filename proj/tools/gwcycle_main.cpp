// gwcycle command-line front end.  All mathematics goes through the C API
// of the shared library; this file only parses arguments and formats output.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwcycle.h"

namespace {

struct CommonArgs {
    std::string space;
    int degree = 0;
    std::string insertions;
    std::string format = "human";
};

int status_to_exit(gw_status s) {
    if (s == GW_OK) return 0;
    return s == GW_ERR_PARSE ? 2 : 1;
}

int fail(gw_status s) {
    std::cerr << "error: " << gw_last_error() << "\n";
    return status_to_exit(s);
}

struct SpaceHandle {
    gw_space* p = nullptr;
    explicit SpaceHandle(const std::string& name) : p(gw_space_create(name.c_str())) {}
    ~SpaceHandle() { gw_space_free(p); }
    SpaceHandle(const SpaceHandle&) = delete;
    SpaceHandle& operator=(const SpaceHandle&) = delete;
};

int print_number(long long v, const std::string& format) {
    if (format == "json") {
        std::cout << "{\"value\":\"" << v << "\"}\n";
    } else if (format == "csv") {
        std::cout << "value\n" << v << "\n";
    } else {
        std::cout << v << "\n";
    }
    return 0;
}

int print_class_json(const std::string& json_text, const std::string& format) {
    if (format == "json") {
        std::cout << json_text << "\n";
        return 0;
    }
    auto j = nlohmann::json::parse(json_text);
    if (format == "csv") {
        std::cout << "basis,coeff\n";
        for (std::size_t k = 0; k < j["basis"].size(); ++k)
            std::cout << j["basis"][k].get<std::string>() << ","
                      << j["coeffs"][k].get<std::string>() << "\n";
        return 0;
    }
    for (std::size_t k = 0; k < j["basis"].size(); ++k)
        std::cout << j["basis"][k].get<std::string>() << ": " << j["coeffs"][k].get<std::string>()
                  << "\n";
    return 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Gromov-Witten cycle classes on the moduli of stable rational curves"};
    app.require_subcommand(1);

    int threads = 1;
    app.add_option("--threads", threads, "worker threads for class computations")
        ->default_val(1);

    CommonArgs mult, npoint, fourpoint, fdeg, cls, push, nef;
    std::string mult_a, mult_b, fdeg_curve, rays_path, class_file;
    int push_forget = 0;
    int cls_n = 0;

    auto add_common = [](CLI::App* cmd, CommonArgs& a, bool with_ins = true) {
        cmd->add_option("--space", a.space, "target space, e.g. P3 or Q5")->required();
        if (with_ins)
            cmd->add_option("--insertions", a.insertions, "comma-separated class list")
                ->required();
        cmd->add_option("--degree", a.degree, "curve degree d")->required();
        cmd->add_option("--format", a.format, "human|json|csv")->default_val("human");
    };

    auto* c_mult = app.add_subcommand("qh-mult", "small quantum product of two classes");
    c_mult->add_option("--space", mult.space)->required();
    c_mult->add_option("-a", mult_a, "first class")->required();
    c_mult->add_option("-b", mult_b, "second class")->required();
    c_mult->add_option("--format", mult.format)->default_val("human");

    auto* c_np = app.add_subcommand("gw-npoint", "codimension-0 n-point number");
    add_common(c_np, npoint);

    auto* c_fp = app.add_subcommand("gw-fourpoint", "4-point codimension-1 degree");
    add_common(c_fp, fourpoint);

    auto* c_fd = app.add_subcommand("fcurve-deg", "degree of a divisor class on an F-curve");
    add_common(c_fd, fdeg);
    c_fd->add_option("--fcurve", fdeg_curve, "e.g. F{1|2|3|4,5,6}")->required();

    auto* c_cls = app.add_subcommand("class", "divisor class in the nonadjacent basis");
    add_common(c_cls, cls);
    c_cls->add_option("--n", cls_n, "number of markings (consistency check)");

    auto* c_push = app.add_subcommand("pushforward", "pushforward of a codimension-2 class");
    add_common(c_push, push);
    c_push->add_option("--forget", push_forget, "marking to drop (must be n)")->required();

    auto* c_nef = app.add_subcommand("nef-check", "nef membership and ray decomposition");
    c_nef->add_option("--space", nef.space);
    c_nef->add_option("--insertions", nef.insertions);
    c_nef->add_option("--degree", nef.degree);
    c_nef->add_option("--class-file", class_file, "JSON class vector to check instead");
    c_nef->add_option("--rays", rays_path, "ray table JSON (default: GWCYCLE_RAYS or built-in)");
    c_nef->add_option("--format", nef.format)->default_val("human");

    auto* c_ver = app.add_subcommand("verify", "re-run every quoted example value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // malformed command line
    }
    gw_set_threads(threads);

    try {
        if (c_mult->parsed()) {
            SpaceHandle sp(mult.space);
            if (!sp.p) return fail(GW_ERR_PARSE);
            char* out = nullptr;
            gw_status s = gw_qh_mult(sp.p, mult_a.c_str(), mult_b.c_str(), &out);
            if (s != GW_OK) return fail(s);
            if (mult.format == "json") {
                std::cout << out << "\n";
            } else {
                auto j = nlohmann::json::parse(out);
                std::cout << j["product"].get<std::string>() << "\n";
            }
            gw_string_free(out);
            return 0;
        }
        if (c_np->parsed() || c_fp->parsed()) {
            const CommonArgs& a = c_np->parsed() ? npoint : fourpoint;
            SpaceHandle sp(a.space);
            if (!sp.p) return fail(GW_ERR_PARSE);
            long long v = 0;
            gw_status s = c_np->parsed()
                              ? gw_npoint(sp.p, a.degree, a.insertions.c_str(), &v)
                              : gw_fourpoint(sp.p, a.degree, a.insertions.c_str(), &v);
            if (s != GW_OK) return fail(s);
            return print_number(v, a.format);
        }
        if (c_fd->parsed()) {
            SpaceHandle sp(fdeg.space);
            if (!sp.p) return fail(GW_ERR_PARSE);
            long long v = 0;
            gw_status s =
                gw_fcurve_degree(sp.p, fdeg.degree, fdeg.insertions.c_str(), fdeg_curve.c_str(), &v);
            if (s != GW_OK) return fail(s);
            return print_number(v, fdeg.format);
        }
        if (c_cls->parsed()) {
            SpaceHandle sp(cls.space);
            if (!sp.p) return fail(GW_ERR_PARSE);
            char* out = nullptr;
            gw_status s = gw_divisor_class(sp.p, cls.degree, cls.insertions.c_str(), &out);
            if (s != GW_OK) return fail(s);
            if (cls_n != 0) {
                auto j = nlohmann::json::parse(out);
                if (j["n"].get<int>() != cls_n) {
                    std::cerr << "error: --n disagrees with the insertion count\n";
                    gw_string_free(out);
                    return 2;
                }
            }
            int rc = print_class_json(out, cls.format);
            gw_string_free(out);
            return rc;
        }
        if (c_push->parsed()) {
            SpaceHandle sp(push.space);
            if (!sp.p) return fail(GW_ERR_PARSE);
            char* out = nullptr;
            gw_status s =
                gw_pushforward(sp.p, push.degree, push.insertions.c_str(), push_forget, &out);
            if (s != GW_OK) return fail(s);
            int rc = print_class_json(out, push.format);
            gw_string_free(out);
            return rc;
        }
        if (c_nef->parsed()) {
            std::string class_json;
            if (!class_file.empty()) {
                class_json = read_file(class_file);
            } else if (!nef.space.empty() && !nef.insertions.empty()) {
                SpaceHandle sp(nef.space);
                if (!sp.p) return fail(GW_ERR_PARSE);
                char* out = nullptr;
                gw_status s = gw_divisor_class(sp.p, nef.degree, nef.insertions.c_str(), &out);
                if (s != GW_OK) return fail(s);
                class_json = out;
                gw_string_free(out);
            } else {
                std::cerr << "error: nef-check needs --class-file or --space/--insertions\n";
                return 2;
            }
            std::string rays_json;
            if (rays_path.empty()) {
                const char* env = std::getenv("GWCYCLE_RAYS");
                if (env != nullptr) rays_path = env;
            }
            if (!rays_path.empty()) rays_json = read_file(rays_path);
            char* out = nullptr;
            gw_status s = gw_nef_check(class_json.c_str(),
                                       rays_json.empty() ? nullptr : rays_json.c_str(), &out);
            if (s != GW_OK) return fail(s);
            if (nef.format == "json") {
                std::cout << out << "\n";
            } else {
                auto j = nlohmann::json::parse(out);
                std::cout << "nef: " << (j["nef"].get<bool>() ? "yes" : "no") << "\n";
                std::cout << "contracted F-curves: " << j["contracted"].size() << "\n";
                if (j["decomposition"].is_null()) {
                    std::cout << "decomposition: none in the given rays\n";
                } else {
                    std::cout << "decomposition:";
                    for (auto& [name, c] : j["decomposition"].items())
                        std::cout << " " << name << ":" << c.get<std::string>();
                    std::cout << "\n";
                }
            }
            gw_string_free(out);
            return 0;
        }
        if (c_ver->parsed()) {
            char* out = nullptr;
            int failures = 0;
            gw_status s = gw_verify(&out, &failures);
            if (s != GW_OK) return fail(s);
            auto j = nlohmann::json::parse(out);
            for (const auto& chk : j["checks"]) {
                std::cout << (chk["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << "criterion "
                          << chk["criterion"].get<int>() << ": "
                          << chk["name"].get<std::string>();
                if (!chk["pass"].get<bool>())
                    std::cout << " (expected " << chk["expected"].get<std::string>() << ", got "
                              << chk["got"].get<std::string>() << ")";
                std::cout << "\n";
            }
            std::cout << (failures == 0 ? "all checks passed\n"
                                        : std::to_string(failures) + " checks failed\n");
            gw_string_free(out);
            return failures == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
