#include "CLI11.hpp"
#include "tropfan/io.hpp"
#include "tropfan/oracle.hpp"
#include "tropfan/render.hpp"

#include <fstream>
#include <iostream>

using namespace tropfan;

namespace {

enum Exit { Ok = 0, False = 1, Parse = 2, Incompatible = 3, Unsupported = 4 };

struct Outcome {
    int code;
    std::string text;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write " + out_path);
    out << text;
}

std::string report_text(const ValidationReport& r) {
    if (r.ok()) return "ok\n";
    std::string s;
    for (const auto& v : r.violations) s += v.kind + ": " + v.message + "\n";
    return s;
}

Outcome boolean(bool value) { return {value ? Ok : False, value ? "true\n" : "false\n"}; }

template <class T>
const T& as(const Document& d, const std::string& role) {
    if (!std::holds_alternative<T>(d.payload)) throw IncompatibleBaseError(role + " has kind " + d.kind + ", which this command does not accept");
    return std::get<T>(d.payload);
}

StackyFan checked_fan(const Document& d, const std::string& role) {
    const StackyFan& f = as<StackyFan>(d, role);
    ValidationReport r = validate(f);
    if (!r.ok()) throw ColoringInvalidError(role + " is not a valid stacky fan:\n" + report_text(r));
    return f;
}

AVStackyFan checked_av(const Document& d, const std::string& role) {
    const AVStackyFan& f = as<AVStackyFan>(d, role);
    ValidationReport r = validate_av_fan(f);
    if (!r.ok()) throw ColoringInvalidError(role + " is not a valid translation-invariant fan:\n" + report_text(r));
    return f;
}

MinimalFan minimal_of(const Document& d, const std::string& role) {
    if (std::holds_alternative<MinimalFan>(d.payload)) return std::get<MinimalFan>(d.payload);
    return minimal_fan(checked_fan(d, role));
}

Outcome cmd_validate(const Document& d) {
    if (auto f = std::get_if<StackyFan>(&d.payload)) {
        auto r = validate(*f);
        return {r.ok() ? Ok : False, report_text(r)};
    }
    if (std::holds_alternative<MinimalFan>(d.payload)) return {Ok, "ok\n"};
    if (auto b = std::get_if<PolarizedBase>(&d.payload)) {
        auto r = validate_form(*b);
        return {r.ok() ? Ok : False, report_text(r)};
    }
    if (auto f = std::get_if<AVStackyFan>(&d.payload)) {
        auto r = validate_av_fan(*f);
        return {r.ok() ? Ok : False, report_text(r)};
    }
    if (auto g = std::get_if<MetricGraph>(&d.payload)) {
        auto r = validate_form(jacobian_form(*g));
        return {r.ok() ? Ok : False, report_text(r)};
    }
    throw UnsupportedError("nothing to validate for kind " + d.kind);
}

Outcome cmd_minimal(const Document& d) {
    if (std::holds_alternative<AVStackyFan>(d.payload)) return {Ok, serialize(av_minimal(checked_av(d, "input")))};
    return {Ok, serialize(minimal_of(d, "input"))};
}

Outcome cmd_equiv(const Document& a, const Document& b) {
    Vec witness;
    bool same = false;
    if (std::holds_alternative<AVStackyFan>(a.payload) || std::holds_alternative<AVStackyFan>(b.payload)) {
        same = av_bir_equivalent(checked_av(a, "first input"), checked_av(b, "second input"), &witness);
    } else if (std::holds_alternative<StackyFan>(a.payload) && std::holds_alternative<StackyFan>(b.payload)) {
        const StackyFan fa = checked_fan(a, "first input"), fb = checked_fan(b, "second input");
        if (fa.ambient() != fb.ambient()) throw DimensionError("inputs live in different ambient ranks");
        same = birationally_equivalent(fa, fb, &witness);
    } else {
        MinimalFan ma = minimal_of(a, "first input"), mb = minimal_of(b, "second input");
        if (ma.ambient != mb.ambient) throw DimensionError("inputs live in different ambient ranks");
        same = ma == mb;
        for (long r = 1; !same && witness.empty() && r <= 64; r *= 2) {
            auto sa = s_enumerate(ma, r), sb = s_enumerate(mb, r);
            std::vector<Vec> diff;
            std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(diff));
            if (!diff.empty()) witness = *std::min_element(diff.begin(), diff.end(), witness_less);
        }
    }
    if (same) return {Ok, "equivalent\n"};
    std::string text = "inequivalent\n";
    if (!witness.empty()) text += "witness " + to_string(witness) + "\n";
    return {False, text};
}

FanMorphism morphism(const Document& fine, const Document& coarse) {
    FanMorphism m{checked_fan(fine, "fine fan"), checked_fan(coarse, "coarse fan")};
    if (m.source.ambient() != m.target.ambient()) throw DimensionError("fans live in different ambient ranks");
    ValidationReport r = validate_morphism(m);
    if (!r.ok()) throw IncompatibleBaseError("the identity does not map the fine fan into the coarse fan:\n" + report_text(r));
    return m;
}

Outcome cmd_complete(const Document& d) {
    if (std::holds_alternative<AVStackyFan>(d.payload)) return boolean(av_complete(checked_av(d, "input")));
    if (auto m = std::get_if<MinimalFan>(&d.payload)) return boolean(coloring_is_complete(*m));
    return boolean(is_complete(checked_fan(d, "input")));
}

Outcome cmd_quotient(const Document& d) { return {Ok, serialize(quotient_complex(normalize_orbits(checked_av(d, "input"))))}; }

Outcome cmd_jacobian(const Document& d) { return {Ok, serialize(jacobian_form(as<MetricGraph>(d, "input")))}; }

Outcome cmd_refine(const Document& a, const Document& b) {
    const StackyFan fa = checked_fan(a, "first input"), fb = checked_fan(b, "second input");
    if (fa.ambient() != fb.ambient()) throw DimensionError("fans live in different ambient ranks");
    return {Ok, serialize(common_refinement(fa, fb))};
}

Outcome cmd_render(const Document& d, long radius) {
    RenderOptions opt;
    opt.radius = radius;
    if (auto m = std::get_if<MinimalFan>(&d.payload)) {
        if (m->ambient != 2) throw UnsupportedError("render needs ambient rank 2");
        return {Ok, render_svg(*m, opt)};
    }
    if (auto f = std::get_if<StackyFan>(&d.payload)) {
        if (f->ambient() != 2) throw UnsupportedError("render needs ambient rank 2");
        return {Ok, render_svg(*f, opt)};
    }
    throw UnsupportedError("render accepts rank-2 stacky fans and colorings only");
}

Outcome cmd_s_enumerate(const Document& d, long radius, long bound) {
    if (auto f = std::get_if<StackyFan>(&d.payload)) return {Ok, serialize_points(s_enumerate(*f, radius))};
    if (auto m = std::get_if<MinimalFan>(&d.payload)) return {Ok, serialize_points(s_enumerate(*m, radius))};
    if (auto a = std::get_if<AVStackyFan>(&d.payload)) return {Ok, serialize_points(s_enumerate(*a, radius, bound))};
    throw UnsupportedError("s-enumerate accepts fans and colorings only");
}

Outcome cmd_cover_sample(const Document& d, long count, std::uint64_t seed, long radius) {
    CoverSample s;
    if (auto f = std::get_if<StackyFan>(&d.payload))
        s = cover_sample(*f, count, seed, radius);
    else if (auto a = std::get_if<AVStackyFan>(&d.payload))
        s = cover_sample(*a, count, seed, radius);
    else
        throw UnsupportedError("cover-sample accepts stacky fans and translation-invariant fans only");
    std::string text = "covered " + std::to_string(s.covered) + "/" + std::to_string(s.total) + "\n";
    if (s.first_uncovered) text += "uncovered " + to_string(*s.first_uncovered) + "\n";
    return {s.covered == s.total ? Ok : False, text};
}

Outcome cmd_translations(const Document& d, long bound, int first, int second) {
    const AVStackyFan& f = as<AVStackyFan>(d, "input");
    std::vector<const StackyCone*> top;
    for (const auto& c : f.cones())
        if (c.cone.dim() == f.base().ambient()) top.push_back(&c);
    auto pick = [&](int i) -> const Cone& {
        if (i < 0 || i >= static_cast<int>(top.size())) throw InvalidInputError("cell index " + std::to_string(i) + " out of range");
        return top[i]->cone;
    };
    return {Ok, serialize_points(translations_bruteforce(pick(first), pick(second), f.base(), bound))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stacky fans, minimal models and translation-invariant fans over tropical abelian bases"};
    app.require_subcommand(1);
    std::string out_path;

    std::string file_a, file_b;
    long radius = 4, bound = 10, count = 100;
    std::uint64_t seed = 1;
    int first = 0, second = 1;

    auto* validate_cmd = app.add_subcommand("validate", "Validate a document");
    validate_cmd->add_option("file", file_a)->required();
    auto* minimal_cmd = app.add_subcommand("minimal", "Canonical minimal representative");
    minimal_cmd->add_option("file", file_a)->required();
    minimal_cmd->add_option("--out", out_path);
    auto* equiv_cmd = app.add_subcommand("equiv", "Compare the sets S of two inputs");
    equiv_cmd->add_option("first", file_a)->required();
    equiv_cmd->add_option("second", file_b)->required();
    auto* sub_cmd = app.add_subcommand("subdivision", "Is <fine> a subdivision of <coarse>");
    auto* proper_cmd = app.add_subcommand("proper", "Is the identity map <fine> -> <coarse> proper");
    auto* rep_cmd = app.add_subcommand("representable", "Is the identity map <fine> -> <coarse> representable");
    for (auto* c : {sub_cmd, proper_cmd, rep_cmd}) {
        c->add_option("fine", file_a)->required();
        c->add_option("coarse", file_b)->required();
    }
    auto* complete_cmd = app.add_subcommand("complete", "Completeness");
    complete_cmd->add_option("file", file_a)->required();
    auto* quotient_cmd = app.add_subcommand("quotient", "Quotient cone complex of a translation-invariant fan");
    quotient_cmd->add_option("file", file_a)->required();
    quotient_cmd->add_option("--out", out_path);
    auto* jacobian_cmd = app.add_subcommand("jacobian", "Polarized base of a metric graph");
    jacobian_cmd->add_option("file", file_a)->required();
    jacobian_cmd->add_option("--out", out_path);
    auto* refine_cmd = app.add_subcommand("refine", "Common refinement of two fans with equal support");
    refine_cmd->add_option("first", file_a)->required();
    refine_cmd->add_option("second", file_b)->required();
    refine_cmd->add_option("--out", out_path);
    auto* render_cmd = app.add_subcommand("render", "SVG picture of a rank-2 fan or coloring");
    render_cmd->add_option("file", file_a)->required();
    render_cmd->add_option("--out", out_path);
    render_cmd->add_option("--radius", radius);

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force oracles");
    oracle_cmd->require_subcommand(1);
    auto* s_enum = oracle_cmd->add_subcommand("s-enumerate", "List S inside the box of the given radius");
    s_enum->add_option("file", file_a)->required();
    s_enum->add_option("--radius", radius);
    s_enum->add_option("--bound", bound, "translation bound for translation-invariant fans");
    auto* cover = oracle_cmd->add_subcommand("cover-sample", "Random covering check");
    cover->add_option("file", file_a)->required();
    cover->add_option("--count", count);
    cover->add_option("--seed", seed);
    cover->add_option("--radius", radius);
    auto* trans = oracle_cmd->add_subcommand("translations-bruteforce", "Bounded translation enumeration");
    trans->add_option("file", file_a)->required();
    trans->add_option("--bound", bound);
    trans->add_option("--first", first, "index of the first top-dimensional cell");
    trans->add_option("--second", second, "index of the second top-dimensional cell");

    CLI11_PARSE(app, argc, argv);

    try {
        Outcome o{Ok, ""};
        auto doc_a = [&] { return read_document(file_a); };
        auto doc_b = [&] { return read_document(file_b); };
        if (*validate_cmd) {
            try {
                o = cmd_validate(doc_a());
            } catch (const ParseError&) {
                throw;
            } catch (const UnsupportedError&) {
                throw;
            } catch (const DefinitenessRequiredError&) {
                throw;
            } catch (const Error& e) {
                o = {False, std::string("invalid: ") + e.what() + "\n"};
            }
        } else if (*minimal_cmd) {
            o = cmd_minimal(doc_a());
        } else if (*equiv_cmd) {
            o = cmd_equiv(doc_a(), doc_b());
        } else if (*sub_cmd) {
            FanMorphism m = morphism(doc_a(), doc_b());
            o = boolean(is_subdivision(m.source, m.target));
        } else if (*proper_cmd) {
            o = boolean(is_proper(morphism(doc_a(), doc_b())));
        } else if (*rep_cmd) {
            o = boolean(is_representable(morphism(doc_a(), doc_b())));
        } else if (*complete_cmd) {
            o = cmd_complete(doc_a());
        } else if (*quotient_cmd) {
            o = cmd_quotient(doc_a());
        } else if (*jacobian_cmd) {
            o = cmd_jacobian(doc_a());
        } else if (*refine_cmd) {
            o = cmd_refine(doc_a(), doc_b());
        } else if (*render_cmd) {
            o = cmd_render(doc_a(), radius);
        } else if (*s_enum) {
            o = cmd_s_enumerate(doc_a(), radius, bound);
        } else if (*cover) {
            o = cmd_cover_sample(doc_a(), count, seed, radius);
        } else if (*trans) {
            o = cmd_translations(doc_a(), bound, first, second);
        }
        emit(o.text, o.code == Ok ? out_path : "");
        return o.code;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return Parse;
    } catch (const IncompatibleBaseError& e) {
        std::cerr << "incompatible inputs: " << e.what() << "\n";
        return Incompatible;
    } catch (const DimensionError& e) {
        std::cerr << "incompatible inputs: " << e.what() << "\n";
        return Incompatible;
    } catch (const SupportMismatchError& e) {
        std::cerr << "incompatible inputs: " << e.what() << "\n";
        return Incompatible;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return Unsupported;
    } catch (const DefinitenessRequiredError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return Unsupported;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return False;
    }
}
