#pragma once

// Command-line front end. Every verb is a thin call into the library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "io.hpp"

namespace repalg::cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Input {
    bool is_file = false;
    std::string text;  // word or path
    Json json;         // parsed file contents
};

struct Options {
    std::string verb;
    std::optional<std::string> field;
    std::size_t order = 6;
    std::size_t radius = 2;
    std::optional<std::string> window;
    bool json = false;
    std::optional<std::string> emit;
    int shift = 1;
    std::size_t max_len = 2;
    std::vector<Input> inputs;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline QuiverWindow parse_window(const std::string& s) {
    auto colon = s.find(':', 1);
    if (colon == std::string::npos) throw UsageError("--window expects zmin:zmax, got '" + s + "'");
    try {
        std::size_t u1 = 0, u2 = 0;
        int lo = std::stoi(s.substr(0, colon), &u1), hi = std::stoi(s.substr(colon + 1), &u2);
        if (u1 != colon || u2 != s.size() - colon - 1) throw std::invalid_argument(s);
        if (lo > hi) throw UsageError("--window " + s + " is empty");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("--window expects zmin:zmax, got '" + s + "'");
    }
}

template <FieldScalar K>
class Runner {
public:
    Runner(const Options& opt, Field field, std::ostream& out, std::ostream& err)
        : opt_(opt), field_(field), out_(out), err_(err) {}

    int run() {
        const auto& v = opt_.verb;
        if (v == "enumerate") return enumerate();
        load_inputs();
        if (v == "show") return show();
        if (v == "validate") return validate_verb();
        if (v == "hom") return hom();
        if (v == "stablehom") return stablehom();
        if (v == "ext") return ext();
        if (v == "omega") return emit_module(syzygy(one()));
        if (v == "coomega") return emit_module(cosyzygy(one()));
        if (v == "nu") return emit_module(nakayama_shift(one(), opt_.shift));
        if (v == "tau") {
            std::vector<std::string> warnings;
            auto t = ar_translate(one(), &warnings);
            for (const auto& w : warnings) err_ << "warning: " << w << "\n";
            return emit_module(t);
        }
        if (v == "classify") return classify();
        if (v == "lift") return lift();
        if (v == "orbit") return orbit();
        throw UsageError("unknown verb '" + v + "'");
    }

private:
    void load_inputs() {
        std::optional<QuiverWindow> window;
        if (opt_.window) window = parse_window(*opt_.window);
        for (const auto& in : opt_.inputs) {
            Representation<K> m = in.is_file ? module_from_json<K>(in.json)
                                             : string_module<K>(parse_string(in.text), field_);
            if (window) {
                if (!window->contains(m.support_window()))
                    throw DomainError(in.text + " is not supported in the window " + *opt_.window);
                m = m.trimmed().embedded(*window);
            }
            modules_.push_back(std::move(m));
            labels_.push_back(in.text);
        }
    }

    void need_inputs(std::size_t lo, std::size_t hi) const {
        std::size_t n = modules_.size();
        if (n < lo || n > hi) {
            std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " or " + std::to_string(hi);
            throw UsageError(opt_.verb + " takes " + want + " module(s), got " + std::to_string(n));
        }
    }

    const Representation<K>& one() const {
        need_inputs(1, 1);
        return modules_[0];
    }

    void print_json(const Json& j) { out_ << j.dump(2) << "\n"; }

    int show() {
        need_inputs(1, 64);
        Json all = Json::array();
        for (std::size_t i = 0; i < modules_.size(); ++i) {
            const auto& m = modules_[i];
            if (opt_.json) {
                all.push_back(module_to_json(m));
                continue;
            }
            out_ << labels_[i] << ": field " << m.field().to_string() << ", window [" << m.window().z_min() << ", "
                 << m.window().z_max() << "], dims " << dim_vector_label(m.dim_vector()) << ", total "
                 << m.total_dim() << "\n";
            for (const auto& [a, x] : m.stored_mats()) out_ << "  " << a.name() << " = " << matrix_to_json(x).dump() << "\n";
        }
        if (opt_.json) print_json(all.size() == 1 ? all[0] : all);
        return 0;
    }

    int validate_verb() {
        need_inputs(1, 64);
        bool ok = true;
        Json all = Json::array();
        for (std::size_t i = 0; i < modules_.size(); ++i) {
            auto vs = validate(modules_[i]);
            ok = ok && vs.empty();
            Json list = Json::array();
            for (const auto& v : vs) list.push_back({{"relation", v.relation}, {"detail", v.detail}});
            all.push_back({{"module", labels_[i]}, {"valid", vs.empty()}, {"violations", list}});
            if (!opt_.json) {
                out_ << labels_[i] << ": " << (vs.empty() ? "valid" : "invalid") << "\n";
                for (const auto& v : vs) out_ << "  violates " << v.relation << ": " << v.detail << "\n";
            }
        }
        if (opt_.json) print_json(all.size() == 1 ? all[0] : all);
        return ok ? 0 : 1;
    }

    const Representation<K>& second() const { return modules_.size() == 2 ? modules_[1] : modules_[0]; }

    int hom() {
        need_inputs(2, 2);
        auto d = hom_dim(modules_[0], modules_[1]);
        auto iso = is_isomorphic(modules_[0], modules_[1]);
        if (opt_.json)
            print_json({{"hom_dim", d}, {"isomorphic", to_string(iso.status)}});
        else
            out_ << "hom_dim " << d << "\nisomorphic " << to_string(iso.status) << "\n";
        return 0;
    }

    int stablehom() {
        need_inputs(2, 2);
        auto r = stable_hom_routes(modules_[0], modules_[1]);
        auto d = stable_hom_dim(modules_[0], modules_[1]);
        if (opt_.json)
            print_json({{"stable_hom_dim", d}, {"hom_dim", r.hom}, {"projective_maps", r.via_hull}});
        else
            out_ << d << "\n";
        return 0;
    }

    int ext() {
        need_inputs(1, 2);
        auto d = ext1_dim(modules_[0], second());
        if (opt_.json)
            print_json({{"ext1_dim", d}});
        else
            out_ << d << "\n";
        return 0;
    }

    int emit_module(const Representation<K>& m) {
        auto j = module_to_json(m);
        if (opt_.emit) {
            std::ofstream f(*opt_.emit, std::ios::binary);
            if (!f) throw DomainError("cannot write '" + *opt_.emit + "'");
            f << j.dump(2) << "\n";
            if (!f) throw DomainError("failed writing '" + *opt_.emit + "'");
        } else {
            print_json(j);
        }
        return 0;
    }

    int classify() {
        need_inputs(1, 1);
        auto rep = classify_versal_ring(modules_[0], opt_.order);
        print_json(report_to_json(rep, labels_[0]));
        return 0;
    }

    int lift() {
        need_inputs(1, 1);
        const auto& m = modules_[0];
        auto tangent = first_order_lifts(m);
        Json classes = Json::array();
        for (const auto& cls : tangent) {
            Json entry = {{"cocycle", cocycle_to_json(cls)}};
            auto res = opt_.order >= 2 ? extend_lift(first_order_lift(m, cls), opt_.order)
                                       : std::variant<Lift<K>, Obstruction<K>>(trivial_lift(m, opt_.order));
            if (auto* l = std::get_if<Lift<K>>(&res)) {
                entry["lift"] = lift_to_json(*l);
                entry["obstruction"] = nullptr;
            } else {
                const auto& ob = std::get<Obstruction<K>>(res);
                Json residual = Json::array();
                for (const auto& x : ob.residual) residual.push_back(x.to_string());
                entry["lift"] = nullptr;
                entry["obstruction"] = {{"order", ob.order}, {"residual", residual}};
            }
            classes.push_back(std::move(entry));
        }
        if (opt_.json) {
            print_json({{"module", labels_[0]}, {"tangent_dim", tangent.size()}, {"order", opt_.order}, {"classes", classes}});
            return 0;
        }
        out_ << "tangent_dim " << tangent.size() << "\n";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const auto& c = classes[i];
            out_ << "class " << i << ": cocycle " << c["cocycle"].dump() << "\n";
            if (c["obstruction"].is_null())
                out_ << "  lifts to order " << opt_.order << ": " << c["lift"]["mats"].dump() << "\n";
            else
                out_ << "  obstructed at order " << c["obstruction"]["order"].get<std::size_t>() << "\n";
        }
        return 0;
    }

    int orbit() {
        need_inputs(1, 1);
        auto g = orbit_graph(modules_[0], opt_.radius);
        if (opt_.json)
            print_json(orbit_to_json(g));
        else
            out_ << emit_dot(g);
        return 0;
    }

    int enumerate() {
        if (!opt_.inputs.empty()) throw UsageError("enumerate takes no modules");
        if (!opt_.window) throw UsageError("enumerate needs --window zmin:zmax");
        auto words = enumerate_strings(parse_window(*opt_.window), opt_.max_len);
        if (opt_.json) {
            Json list = Json::array();
            for (const auto& w : words) list.push_back(w.to_string());
            print_json(list);
        } else {
            for (const auto& w : words) out_ << w.to_string() << "\n";
        }
        return 0;
    }

    const Options& opt_;
    Field field_;
    std::ostream& out_;
    std::ostream& err_;
    std::vector<Representation<K>> modules_;
    std::vector<std::string> labels_;
};

inline const std::vector<std::string>& verbs() {
    static const std::vector<std::string> v{"show",     "validate", "hom",  "stablehom", "ext",   "omega",    "coomega",
                                            "nu",       "tau",      "classify", "lift",  "orbit", "enumerate"};
    return v;
}

/// Module inputs in command-line order, whichever flag introduced them.
inline std::vector<Input> ordered_inputs(const std::vector<std::string>& args) {
    std::vector<Input> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const auto& a = args[i];
        for (auto [flag, is_file] : {std::pair{std::string("--string"), false}, std::pair{std::string("--module"), true}}) {
            if (a == flag && i + 1 < args.size())
                out.push_back({is_file, args[++i], {}});
            else if (a.rfind(flag + "=", 0) == 0)
                out.push_back({is_file, a.substr(flag.size() + 1), {}});
        }
    }
    return out;
}

inline Options parse_args(const std::vector<std::string>& args, std::ostream& out, bool& help_shown) {
    Options opt;
    CLI::App app{"repalg: modules over the repetitive Kronecker algebra"};
    app.require_subcommand(1);
    std::vector<std::string> strings, modules;
    for (const auto& verb : verbs()) {
        auto* sub = app.add_subcommand(verb);
        sub->add_option("--field", opt.field, "Q or F<p>");
        sub->add_option("--order", opt.order, "truncation order n of k[t]/(t^n)")->check(CLI::PositiveNumber);
        sub->add_option("--radius", opt.radius, "orbit radius");
        sub->add_option("--window", opt.window, "zmin:zmax");
        sub->add_flag("--json", opt.json, "machine-readable output");
        sub->add_option("--string", strings, "string word, e.g. \"a0\" or \"b0^-1 a0\"");
        sub->add_option("--module", modules, "JSON module file");
        sub->add_option("--emit", opt.emit, "write the resulting module to a file");
        sub->add_option("--shift", opt.shift, "Nakayama shift amount");
        sub->add_option("--max-len", opt.max_len, "maximal word length for enumerate");
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        help_shown = true;
        out << app.help();
        return opt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    opt.verb = app.get_subcommands().front()->get_name();
    opt.inputs = ordered_inputs(args);
    return opt;
}

inline void report_error(const std::string& kind, const std::string& detail, bool as_json, std::ostream& out,
                         std::ostream& err) {
    if (as_json)
        out << Json{{"error", {{"kind", kind}, {"detail", detail}}}}.dump(2) << "\n";
    else
        err << "error (" << kind << "): " << detail << "\n";
}

/// Exit codes: 0 success, 1 domain error, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    bool as_json = std::find(args.begin(), args.end(), "--json") != args.end();
    try {
        bool help = false;
        Options opt = parse_args(args, out, help);
        if (help) return 0;
        std::optional<Field> field;
        if (opt.field) {
            try {
                field = Field::parse(*opt.field);
            } catch (const Error& e) {
                throw UsageError(std::string("--field: ") + e.what());
            }
        }
        for (auto& in : opt.inputs) {
            if (!in.is_file) continue;
            in.json = parse_json_text(read_file(in.text), in.text);
            Field f = field_from_module_json(in.json);
            if (field && !(*field == f))
                throw FieldMismatch(in.text + " is over " + f.to_string() + " but the inputs are over " +
                                    field->to_string());
            field = f;
        }
        Field f = field.value_or(Field::rationals());
        if (f.is_rationals()) return Runner<Rational>(opt, f, out, err).run();
        return Runner<Zp>(opt, f, out, err).run();
    } catch (const UsageError& e) {
        report_error("usage", e.what(), as_json, out, err);
        return 2;
    } catch (const Error& e) {
        report_error(e.kind(), e.what(), as_json, out, err);
        return 1;
    }
}

}  // namespace repalg::cli
