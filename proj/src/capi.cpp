#include "finlab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "finlab/errors.hpp"
#include "harness/generate.hpp"
#include "harness/instance.hpp"
#include "harness/suites.hpp"

struct lab_instance {
    finlab::Instance instance;
};

namespace {

using finlab::json;

thread_local std::string last_error;

lab_status status_of(finlab::ErrorCode code) { return static_cast<lab_status>(static_cast<int>(code) + 1); }

char* copy_out(const std::string& s) {
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (buf) std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
}

template <class F>
lab_status guarded(char** out, F&& body) {
    try {
        if (!out) throw finlab::LabError(finlab::ErrorCode::InvalidArgument, "null output pointer");
        *out = nullptr;
        const std::string text = body();
        *out = copy_out(text);
        if (!*out) throw std::bad_alloc();
        last_error.clear();
        return LAB_OK;
    } catch (const finlab::LabError& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const json::exception& e) {
        last_error = e.what();
        return LAB_ERR_PARSE;
    } catch (const std::exception& e) {
        last_error = e.what();
        return LAB_ERR_INTERNAL;
    }
}

json parse_request(const char* request) {
    if (!request) throw finlab::LabError(finlab::ErrorCode::InvalidArgument, "null request");
    try {
        json j = json::parse(request);
        if (!j.is_object()) throw finlab::LabError(finlab::ErrorCode::Parse, "request must be a JSON object");
        return j;
    } catch (const json::parse_error& e) {
        throw finlab::LabError(finlab::ErrorCode::Parse, e.what());
    }
}

const finlab::Instance& require(const lab_instance* inst) {
    if (!inst) throw finlab::LabError(finlab::ErrorCode::InvalidArgument, "null instance");
    return inst->instance;
}

std::string field_of(const json& req, const char* key) {
    if (!req.contains(key) || !req.at(key).is_string())
        throw finlab::LabError(finlab::ErrorCode::Parse, std::string("request needs string '") + key + "'");
    return req.at(key).get<std::string>();
}

json modulus_to_json(const finlab::Modulus& m) {
    json out = {{"squared", m.squared().get_str()}, {"approx", m.approx()}};
    if (auto e = m.exact()) out["exact"] = e->get_str();
    return out;
}

json matrix_to_json(const finlab::Mat& m, finlab::Field field) {
    json rows = json::array();
    for (const auto& r : m) rows.push_back(finlab::vec_to_json(r, field));
    return rows;
}

}  // namespace

extern "C" {

const char* lab_last_error(void) { return last_error.c_str(); }

const char* lab_status_name(lab_status status) {
    if (status == LAB_OK) return "ok";
    if (status == LAB_ERR_INTERNAL) return "internal";
    if (status > LAB_OK && status < LAB_ERR_INTERNAL) return finlab::to_string(static_cast<finlab::ErrorCode>(status - 1));
    return "unknown";
}

lab_status lab_instance_from_json(const char* text, lab_instance** out) {
    try {
        if (!out || !text) throw finlab::LabError(finlab::ErrorCode::InvalidArgument, "null argument");
        *out = nullptr;
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw finlab::LabError(finlab::ErrorCode::Parse, e.what());
        }
        *out = new lab_instance{finlab::instance_from_json(j)};
        last_error.clear();
        return LAB_OK;
    } catch (const finlab::LabError& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        last_error = e.what();
        return LAB_ERR_INTERNAL;
    }
}

lab_status lab_instance_to_json(const lab_instance* instance, char** out) {
    return guarded(out, [&] { return finlab::to_json(require(instance).raw()).dump(2); });
}

void lab_instance_free(lab_instance* instance) { delete instance; }

void lab_string_free(char* text) { std::free(text); }

lab_status lab_norm(const lab_instance* instance, const char* request, char** out) {
    return guarded(out, [&] {
        const auto& inst = require(instance);
        const json req = parse_request(request);
        const std::string id = field_of(req, "subspace");
        const finlab::Subspace& a = *inst.subspace(id);
        json res = {{"subspace", id}};
        if (req.contains("functional")) {
            const auto ell = finlab::functional_from_json(a, req.at("functional"));
            const auto n = finlab::dual_norm(a, ell);
            res["dual_norm"] = n.value.get_str();
            res["confidence"] = finlab::confidence_to_json(n.confidence);
        } else if (req.contains("function")) {
            const auto f = finlab::function_from_json(a, req.at("function"));
            a.require_coords(f);
            res["norm"] = modulus_to_json(finlab::norm(a, f));
            res["suppmax"] = finlab::points_to_json(a, finlab::suppmax(a, f));
        } else {
            throw finlab::LabError(finlab::ErrorCode::Parse, "norm needs 'function' or 'functional'");
        }
        return res.dump(2);
    });
}

lab_status lab_mset(const lab_instance* instance, const char* request, char** out) {
    return guarded(out, [&] {
        const auto& inst = require(instance);
        const json req = parse_request(request);
        json res;
        if (req.contains("map")) {
            const std::string id = field_of(req, "map");
            const auto& t = inst.map(id);
            const auto r = finlab::choquet_report(t);
            json images = json::array();
            for (const auto& g : r.generator_images)
                images.push_back(finlab::vec_to_json(g.coords, t.domain().field()));
            res = {{"map", id},
                   {"m_set", finlab::points_to_json(t.codomain(), r.m_set)},
                   {"generator_images", images},
                   {"confidence", finlab::confidence_to_json(r.confidence)}};
        } else {
            const std::string id = field_of(req, "subspace");
            const auto& a = inst.subspace(id);
            const auto r = finlab::choquet_report(finlab::LinearMap::identity(a));
            res = {{"subspace", id},
                   {"m_set", finlab::points_to_json(*a, r.m_set)},
                   {"confidence", finlab::confidence_to_json(r.confidence)}};
        }
        return res.dump(2);
    });
}

lab_status lab_boundary(const lab_instance* instance, const char* request, char** out) {
    return guarded(out, [&] {
        const auto& inst = require(instance);
        const json req = parse_request(request);
        const std::string id = field_of(req, "subspace");
        const auto& a = *inst.subspace(id);
        if (!req.contains("points")) throw finlab::LabError(finlab::ErrorCode::Parse, "boundary needs 'points'");
        const auto r = finlab::is_boundary(a, finlab::points_from_json(a, req.at("points")));
        json res = {{"subspace", id}, {"boundary", r.boundary}, {"confidence", finlab::confidence_to_json(r.confidence)}};
        if (r.witness) res["witness"] = finlab::vec_to_json(a.values(*r.witness), a.field());
        return res.dump(2);
    });
}

lab_status lab_sigma(const lab_instance* instance, const char* request, char** out) {
    return guarded(out, [&] {
        const auto& inst = require(instance);
        const json req = parse_request(request);
        const std::string id = field_of(req, "subspace");
        const auto& a = *inst.subspace(id);
        if (!req.contains("family") || !req.at("family").is_array())
            throw finlab::LabError(finlab::ErrorCode::Parse, "sigma needs a 'family' array");
        std::vector<finlab::FunctionVec> members;
        for (const auto& f : req.at("family")) members.push_back(finlab::function_from_json(a, f));
        const auto r = finlab::sigma_check(a, finlab::Family(a, members));
        json ex = json::array();
        for (std::size_t i = 0; i < r.extreme_members.size(); ++i) {
            json e = finlab::functional_to_json(id, r.extreme_members[i], a.field());
            e["point"] = a.ambient().name(r.extreme_points[i]);
            ex.push_back(e);
        }
        json res = {{"subspace", id},
                    {"centered", r.centered},
                    {"extreme_members", ex},
                    {"confidence", finlab::confidence_to_json(r.confidence)}};
        if (r.witness) res["witness"] = finlab::functional_to_json(id, *r.witness, a.field());
        return res.dump(2);
    });
}

lab_status lab_verify_isometry(const lab_instance* instance, const char* request, char** out) {
    return guarded(out, [&] {
        const auto& inst = require(instance);
        const json req = parse_request(request);
        const std::string id = field_of(req, "map");
        const auto& t = inst.map(id);
        const auto r = finlab::verify_into_isometry(t);
        json res = {{"map", id}, {"isometry", r.isometry}, {"confidence", finlab::confidence_to_json(r.confidence)}};
        if (r.witness) res["witness"] = finlab::vec_to_json(t.domain().values(*r.witness), t.domain().field());
        if (r.isometry && req.value("onto", false)) res["onto"] = finlab::verify_onto_isometry(t);
        return res.dump(2);
    });
}

lab_status lab_decompose(const lab_instance* instance, const char* request, char** out) {
    return guarded(out, [&] {
        const auto& inst = require(instance);
        const json req = parse_request(request);
        const std::string id = field_of(req, "map");
        const auto& t = inst.map(id);
        const auto form = finlab::decompose(t, req.value("strict", false));
        json res = finlab::form_to_json(t, form);
        res["map"] = id;
        return res.dump(2);
    });
}

lab_status lab_compose(const lab_instance* instance, const char* request, char** out) {
    return guarded(out, [&] {
        const auto& inst = require(instance);
        const json req = parse_request(request);
        const auto& t1 = inst.map(field_of(req, "first"));
        const auto& t2 = inst.map(field_of(req, "second"));
        const auto f1 = req.contains("first_form") ? finlab::form_from_json(t1, req.at("first_form")) : finlab::decompose(t1);
        const auto f2 = req.contains("second_form") ? finlab::form_from_json(t2, req.at("second_form")) : finlab::decompose(t2);
        const auto r = finlab::compose_forms(t1, f1, t2, f2);
        const auto product = finlab::compose(t1, t2);
        json res = {{"form", finlab::form_to_json(product, r.form)},
                    {"agrees", r.agrees},
                    {"nonempty", r.nonempty},
                    {"inside_mset", r.inside_mset},
                    {"matrix", matrix_to_json(product.matrix(), product.domain().field())}};
        return res.dump(2);
    });
}

lab_status lab_invert(const lab_instance* instance, const char* request, char** out) {
    return guarded(out, [&] {
        const auto& inst = require(instance);
        const json req = parse_request(request);
        const auto& t = inst.map(field_of(req, "map"));
        const auto f = req.contains("form") ? finlab::form_from_json(t, req.at("form")) : finlab::decompose(t);
        const auto r = finlab::invert_form(t, f);
        json res = {{"form", finlab::form_to_json(r.inverse, r.form)},
                    {"agrees", r.agrees},
                    {"matrix", matrix_to_json(r.inverse.matrix(), t.domain().field())}};
        return res.dump(2);
    });
}

lab_status lab_alpha_beta(const lab_instance* instance, const char* request, char** out) {
    return guarded(out, [&] {
        const auto& inst = require(instance);
        const json req = parse_request(request);
        const std::string id = field_of(req, "map");
        const auto& t = inst.map(id);
        const auto r = finlab::property_alpha_beta(t);
        json at = json::object();
        for (std::size_t z = 0; z < r.beta_at.size(); ++z) at[t.codomain().ambient().name(z)] = finlab::to_string(r.beta_at[z]);
        json res = {{"map", id},
                    {"alpha", r.alpha},
                    {"alpha_note", r.alpha_note},
                    {"beta", finlab::to_string(r.beta)},
                    {"beta_at", at},
                    {"confidence", finlab::confidence_to_json(r.confidence)}};
        return res.dump(2);
    });
}

lab_status lab_run_suite(const char* suite_id, int trials, uint64_t seed, char** out) {
    return guarded(out, [&] {
        if (!suite_id) throw finlab::LabError(finlab::ErrorCode::InvalidArgument, "null suite id");
        return finlab::to_json(finlab::run_suite(suite_id, trials, seed)).dump(2);
    });
}

lab_status lab_list_suites(char** out) {
    return guarded(out, [&] {
        std::string s;
        for (const auto& suite : finlab::suites()) s += suite.id + "\n";
        return s;
    });
}

lab_status lab_generate(const char* kind, uint64_t seed, int max_points, int max_dim, int coefficient_height,
                        const char* field, char** out) {
    return guarded(out, [&] {
        if (!kind) throw finlab::LabError(finlab::ErrorCode::InvalidArgument, "null kind");
        finlab::Field f = finlab::Field::Real;
        if (field && std::string(field) == "complex") f = finlab::Field::Complex;
        else if (field && std::string(field) != "real")
            throw finlab::LabError(finlab::ErrorCode::InvalidArgument, "field must be real or complex");
        const finlab::Scale scale{max_points, max_dim, coefficient_height};
        return finlab::to_json(finlab::gen_instance(seed, scale, finlab::kind_from_string(kind), f)).dump(2);
    });
}

}  // extern "C"
