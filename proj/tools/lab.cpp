#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "finlab.h"

namespace {

using json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitProperty = 1;
constexpr int kExitUsage = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Inline JSON, or @path for a file.
json json_arg(const std::string& text) {
    const std::string body = !text.empty() && text[0] == '@' ? read_file(text.substr(1)) : text;
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("bad JSON argument: ") + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text << '\n';
}

class Handle {
public:
    explicit Handle(const std::string& path) {
        const std::string text = read_file(path);
        if (lab_instance_from_json(text.c_str(), &ptr_) != LAB_OK) throw InputError(path + ": " + lab_last_error());
    }
    ~Handle() { lab_instance_free(ptr_); }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    const lab_instance* get() const { return ptr_; }

private:
    lab_instance* ptr_ = nullptr;
};

using Call = lab_status (*)(const lab_instance*, const char*, char**);

json call(Call fn, const Handle& h, const json& request) {
    char* out = nullptr;
    const lab_status st = fn(h.get(), request.dump().c_str(), &out);
    if (st != LAB_OK) throw InputError(std::string(lab_status_name(st)) + ": " + lab_last_error());
    json res = json::parse(out);
    lab_string_free(out);
    return res;
}

json take(lab_status st, char* out) {
    if (st != LAB_OK) throw InputError(std::string(lab_status_name(st)) + ": " + lab_last_error());
    std::string text(out);
    lab_string_free(out);
    return json::parse(text);
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite function-space lab"};
    app.require_subcommand(1);

    std::string instance_path, subspace, map_id, first, second, function, functional, points, family, form;
    bool onto = false, strict = false;

    auto* norm = app.add_subcommand("norm", "sup norm of a function or dual norm of a functional");
    norm->add_option("instance", instance_path, "instance JSON file")->required();
    norm->add_option("--subspace", subspace)->required();
    auto* fn_opt = norm->add_option("--function", function, "values, {\"coords\": ...} or {point: value}");
    norm->add_option("--functional", functional, "basis coordinates")->excludes(fn_opt);

    auto* mset = app.add_subcommand("mset", "M_T of a map, or M(A) of a subspace");
    mset->add_option("instance", instance_path)->required();
    auto* mset_map = mset->add_option("--map", map_id);
    mset->add_option("--subspace", subspace)->excludes(mset_map);

    auto* boundary = app.add_subcommand("boundary", "whether a point set is a boundary");
    boundary->add_option("instance", instance_path)->required();
    boundary->add_option("--subspace", subspace)->required();
    boundary->add_option("--points", points, "JSON array of point names")->required();

    auto* sigma = app.add_subcommand("sigma", "centering test and extreme members for a family");
    sigma->add_option("instance", instance_path)->required();
    sigma->add_option("--subspace", subspace)->required();
    sigma->add_option("--family", family, "JSON array of functions")->required();

    auto* verify = app.add_subcommand("verify-isometry", "into (and optionally onto) isometry check");
    verify->add_option("instance", instance_path)->required();
    verify->add_option("--map", map_id)->required();
    verify->add_flag("--onto", onto);

    auto* dec = app.add_subcommand("decompose", "weighted composition form of an isometry");
    dec->add_option("instance", instance_path)->required();
    dec->add_option("--map", map_id)->required();
    dec->add_flag("--strict", strict, "fail instead of choosing within an equivalence class");

    auto* comp = app.add_subcommand("compose", "form of second o first");
    comp->add_option("instance", instance_path)->required();
    comp->add_option("--first", first)->required();
    comp->add_option("--second", second)->required();

    auto* inv = app.add_subcommand("invert", "form of the inverse of an onto isometry");
    inv->add_option("instance", instance_path)->required();
    inv->add_option("--map", map_id)->required();
    inv->add_option("--form", form, "form JSON; decomposed when absent");

    auto* beta = app.add_subcommand("beta", "properties alpha and beta of an isometry");
    beta->add_option("instance", instance_path)->required();
    beta->add_option("--map", map_id)->required();

    std::string suite_id, out_dir = ".";
    int trials = 100;
    std::uint64_t seed = 0;
    auto* suite = app.add_subcommand("suite", "run a property suite");
    suite->add_option("id", suite_id)->required();
    suite->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
    suite->add_option("--seed", seed);
    suite->add_option("--out", out_dir, "directory for counterexample files");

    app.add_subcommand("suites", "list suite ids");

    std::string kind, field = "real", output;
    int max_points = 8, max_dim = 4, height = 8;
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--kind", kind)->required();
    gen->add_option("--seed", seed);
    gen->add_option("--max-points", max_points);
    gen->add_option("--max-dim", max_dim);
    gen->add_option("--height", height);
    gen->add_option("--field", field)->check(CLI::IsMember({"real", "complex"}));
    gen->add_option("-o,--output", output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*norm) {
            Handle h(instance_path);
            json req = {{"subspace", subspace}};
            if (!function.empty()) req["function"] = json_arg(function);
            else if (!functional.empty()) req["functional"] = json_arg(functional);
            else throw InputError("norm needs --function or --functional");
            print(call(lab_norm, h, req));
        } else if (*mset) {
            Handle h(instance_path);
            json req = map_id.empty() ? json{{"subspace", subspace}} : json{{"map", map_id}};
            if (map_id.empty() && subspace.empty()) throw InputError("mset needs --map or --subspace");
            print(call(lab_mset, h, req));
        } else if (*boundary) {
            Handle h(instance_path);
            print(call(lab_boundary, h, {{"subspace", subspace}, {"points", json_arg(points)}}));
        } else if (*sigma) {
            Handle h(instance_path);
            print(call(lab_sigma, h, {{"subspace", subspace}, {"family", json_arg(family)}}));
        } else if (*verify) {
            Handle h(instance_path);
            json res = call(lab_verify_isometry, h, {{"map", map_id}, {"onto", onto}});
            print(res);
            if (!res.at("isometry").get<bool>()) {
                const std::string path = "counterexample-" + map_id + ".json";
                write_file(path, json{{"map", map_id}, {"witness", res.value("witness", json())}}.dump(2));
                std::cerr << "not an isometry; witness written to " << path << '\n';
                return kExitProperty;
            }
            if (onto && !res.value("onto", false)) return kExitProperty;
        } else if (*dec) {
            Handle h(instance_path);
            print(call(lab_decompose, h, {{"map", map_id}, {"strict", strict}}));
        } else if (*comp) {
            Handle h(instance_path);
            json res = call(lab_compose, h, {{"first", first}, {"second", second}});
            print(res);
            if (!res.at("agrees").get<bool>()) return kExitProperty;
        } else if (*inv) {
            Handle h(instance_path);
            json req = {{"map", map_id}};
            if (!form.empty()) req["form"] = json_arg(form);
            json res = call(lab_invert, h, req);
            print(res);
            if (!res.at("agrees").get<bool>()) return kExitProperty;
        } else if (*beta) {
            Handle h(instance_path);
            print(call(lab_alpha_beta, h, {{"map", map_id}}));
        } else if (*suite) {
            char* out = nullptr;
            const lab_status st = lab_run_suite(suite_id.c_str(), trials, seed, &out);
            json report = take(st, out);
            const auto& failures = report.at("failures");
            for (std::size_t k = 0; k < failures.size(); ++k) {
                std::filesystem::create_directories(out_dir);
                const std::string path =
                    (std::filesystem::path(out_dir) / ("counterexample-" + suite_id + "-" + std::to_string(k) + ".json")).string();
                write_file(path, failures[k].at("instance").dump(2));
                std::cerr << "counterexample: " << path << " (" << failures[k].at("note").get<std::string>() << ")\n";
            }
            print(report);
            return report.at("status") == "pass" ? kExitPass : kExitProperty;
        } else if (app.got_subcommand("suites")) {
            char* out = nullptr;
            if (lab_list_suites(&out) != LAB_OK) throw InputError(lab_last_error());
            std::cout << out;
            lab_string_free(out);
        } else if (*gen) {
            char* out = nullptr;
            const lab_status st = lab_generate(kind.c_str(), seed, max_points, max_dim, height, field.c_str(), &out);
            json inst = take(st, out);
            if (output.empty()) print(inst);
            else write_file(output, inst.dump(2));
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitPass;
}
