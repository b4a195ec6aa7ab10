#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "tworat/serialize.hpp"
#include "verify.hpp"

namespace tworat::cli {

namespace {

enum class Format { Json, Csv };

constexpr i64 kMaxEnumerateBound = 10'000'000;

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// A table of rows, written as CSV (with a schema column) or JSON.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;

    void write(std::ostream& os, Format fmt, const Json& header) const {
        if (fmt == Format::Json) {
            Json doc = header;
            Json arr = Json::array();
            for (const auto& r : rows) {
                Json obj = Json::object();
                for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = r[i];
                arr.push_back(std::move(obj));
            }
            doc["rows"] = std::move(arr);
            os << doc.dump(2) << "\n";
            return;
        }
        os << "schema";
        for (const auto& c : columns) os << "," << c;
        os << "\n";
        for (const auto& r : rows) {
            os << kSchemaVersion;
            for (const auto& v : r) os << "," << (v.is_null() ? std::string() : csv_cell(v.is_string() ? v.get<std::string>() : v.dump()));
            os << "\n";
        }
    }
};

std::string evidence_summary(const Verdict& v) {
    std::string out;
    for (const auto& e : v.evidence) {
        if (!out.empty()) out += "; ";
        out += e.condition + ": " + e.values;
    }
    return out;
}

void check_bound(i64 bound, i64 max, const std::string& what) {
    if (bound < 1 || bound > max) {
        throw InvalidArgument(what + " bound must lie in [1, " + std::to_string(max) + "], got " + std::to_string(bound));
    }
}

Table enumerate_quad_birational(i64 bound) {
    Table t{{"d", "label", "tag", "evidence"}, {}};
    for (i64 d = 1; d <= bound; ++d) {
        std::optional<SquarefreeInt> s;
        try {
            s.emplace(d);
        } catch (const InvalidArgument&) {
            continue;
        }
        const Verdict v = is_2birational_quadratic(d);
        if (v.positive) t.rows.push_back({d, -d, to_string(v.tag), evidence_summary(v)});
    }
    return t;
}

Table enumerate_multiquad_rational(i64 bound) {
    Table t{{"field", "odd_prime", "degree", "signature", "tag", "evidence"}, {}};
    auto emit = [&](i64 p, const std::vector<SquarefreeInt>& elements) {
        // every subgroup is generated by at most three of the elements
        std::set<std::vector<i64>> seen;
        std::vector<MultiquadField> fields;
        const std::size_t n = elements.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            if (__builtin_popcountll(mask) > 3) continue;
            std::vector<SquarefreeInt> gens;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask >> i & 1) gens.push_back(elements[i]);
            }
            MultiquadField F = make_field(gens);
            const auto primes = F.odd_primes();
            if ((p == 0) != primes.empty()) continue;
            if (seen.insert(F.basis_values()).second) fields.push_back(std::move(F));
        }
        std::sort(fields.begin(), fields.end(), [](const MultiquadField& a, const MultiquadField& b) {
            if (a.dim() != b.dim()) return a.dim() < b.dim();
            if (a.is_imaginary() != b.is_imaginary()) return !a.is_imaginary();
            auto ka = a.basis_values(), kb = b.basis_values();
            for (auto& x : ka) x = x < 0 ? -2 * x + 1 : 2 * x;
            for (auto& x : kb) x = x < 0 ? -2 * x + 1 : 2 * x;
            return ka < kb;
        });
        for (const auto& F : fields) {
            const Verdict v = is_2rational_multiquadratic(F);
            if (!v.positive) continue;
            t.rows.push_back({F.to_string(), p == 0 ? Json(nullptr) : Json(p), static_cast<i64>(F.degree()),
                              F.is_imaginary() ? "imaginary" : "real", to_string(v.tag), evidence_summary(v)});
        }
    };
    const SquarefreeInt minus1(-1), two(2), minus2(-2);
    emit(0, {minus1, two, minus2});
    for (i64 p = 3; p <= bound; p += 2) {
        if (mod(p, 8) != 3 && mod(p, 8) != 5) continue;
        if (!is_prime(p)) continue;
        const SquarefreeInt sp(p);
        std::vector<SquarefreeInt> elements{minus1, two, minus2};
        for (std::size_t i = 0, n = elements.size(); i < n; ++i) elements.push_back(squarefree_product(elements[i], sp));
        elements.push_back(sp);
        emit(p, elements);
    }
    return t;
}

Table enumerate_class_groups(i64 bound) {
    Table t{{"D", "class_number", "invariant_factors", "two_rank", "genus_two_rank", "dyadic_class_orders"}, {}};
    for (i64 a = 3; a <= bound; ++a) {
        for (i64 D : {-a, a}) {
            if (!is_fundamental_discriminant(D)) continue;
            const ClassGroup G = narrow_class_group(D);
            t.rows.push_back({D, static_cast<i64>(G.size()), join_cell(G.structure().invariant_factors),
                              G.structure().rank_at(2), genus_2rank(D), join_cell(G.dyadic_class_orders())});
        }
    }
    return t;
}

Table enumerate_prime_profiles(i64 bound, int depth) {
    Table t{{"prime", "class", "split_depth", "f", "g"}, {}};
    for (i64 q = 3; q <= bound; q += 2) {
        if (!is_prime(q)) continue;
        const auto prof = decomposition_profile(OddPrime(q), depth);
        std::vector<i64> fs, gs;
        for (const auto& l : prof.levels) {
            fs.push_back(l.f);
            gs.push_back(l.g);
        }
        const auto cls = classify_profile(prof);
        t.rows.push_back({q, cls.name(), cls.split_depth(), join_cell(fs), join_cell(gs)});
    }
    return t;
}

Table rayclass_table(i64 bound, int levels) {
    Table t{{"p", "q", "order", "kprime"}, {}};
    for (i64 p = 3; p <= bound; p += 2) {
        if ((mod(p, 8) != 3 && mod(p, 8) != 5) || !is_prime(p)) continue;
        for (i64 q = 3; q <= bound; q += 2) {
            if (q == p || (mod(q, 8) != 3 && mod(q, 8) != 5) || !is_prime(q)) continue;
            const auto r = gal_N(OddPrime(p), OddPrime(q), levels);
            t.rows.push_back({p, q, r.stabilized_order, r.quadratic_character.value()});
        }
    }
    return t;
}

Json verify_report(i64 bound, bool& ok) {
    const auto suites = run_verify(bound);
    Json arr = Json::array();
    i64 checked = 0, failed = 0, skipped = 0;
    for (const auto& s : suites) {
        arr.push_back({{"name", s.name},
                       {"bound", s.bound},
                       {"checked", s.checked},
                       {"passed", s.checked - s.failed - s.skipped},
                       {"failed", s.failed},
                       {"skipped", s.skipped},
                       {"failures", s.failures}});
        checked += s.checked;
        failed += s.failed;
        skipped += s.skipped;
    }
    ok = failed == 0;
    return Json{{"schema", kSchemaVersion}, {"bound", bound},  {"suites", std::move(arr)}, {"checked", checked},
                {"failed", failed},         {"skipped", skipped}, {"ok", ok}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classification of 2-rational and 2-birational multiquadratic fields", "tworat"};
    app.require_subcommand(1);
    std::string output_path;
    app.add_option("--output", output_path, "Write data to this file instead of stdout");

    const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};

    auto* classify = app.add_subcommand("classify", "Decide 2-rationality or 2-birationality of a field");
    std::string gens;
    classify->add_option("gens", gens, "Comma-separated generators, e.g. 6,-15")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Tabulate classified fields or class groups");
    std::string kind;
    i64 bound = 0;
    Format format = Format::Json;
    int depth = kDefaultTowerDepth;
    enumerate->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"quad-birational", "multiquad-rational", "class-groups", "prime-profiles"}));
    enumerate->add_option("--bound", bound)->required();
    enumerate->add_option("--format", format)->transform(CLI::CheckedTransformer(formats));
    enumerate->add_option("--depth", depth, "Tower depth for prime-profiles")->check(CLI::Range(1, kMaxTowerDepth));

    auto* verify = app.add_subcommand("verify", "Run the classifier/oracle agreement suites");
    i64 verify_bound = 0;
    verify->add_option("--bound", verify_bound)->required();

    auto* kprime = app.add_subcommand("kprime", "Find the quadratic field ramified at p and split at q");
    i64 p = 0, q = 0;
    kprime->add_option("--p", p)->required();
    kprime->add_option("--q", q)->required();

    auto* rayclass = app.add_subcommand("rayclass", "Ray-class quotient of (Z/2^k p)^* by -1 and q");
    i64 rp = 0, rq = 0, table_bound = 0;
    int levels = 12;
    bool table = false;
    Format rformat = Format::Csv;
    rayclass->add_option("--p", rp);
    rayclass->add_option("--q", rq);
    rayclass->add_option("--levels", levels)->check(CLI::Range(5, 60));
    rayclass->add_flag("--table", table, "Emit (p, q, order, K') rows for primitive pairs up to --bound");
    rayclass->add_option("--bound", table_bound);
    rayclass->add_option("--format", rformat, "Table format")->transform(CLI::CheckedTransformer(formats));

    auto* tower = app.add_subcommand("tower", "Plan a tower of quadratic propagation steps");
    i64 tp = 0, tq = 0;
    std::string choices;
    bool realize = false;
    tower->add_option("--p", tp)->required();
    tower->add_option("--q", tq)->required();
    tower->add_option("--choices", choices)->required();
    tower->add_flag("--realize", realize, "Realize step 1 explicitly");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    std::ostringstream data;
    int code = kExitOk;
    try {
        if (classify->parsed()) {
            const MultiquadField F = parse_field(gens);
            const bool imaginary = F.is_imaginary();
            const Verdict v = imaginary ? is_2birational_multiquadratic(F) : is_2rational_multiquadratic(F);
            Json doc{{"schema", kSchemaVersion},
                     {"input", gens},
                     {"field", to_json(F)},
                     {"property", imaginary ? "2-birational" : "2-rational"}};
            doc.update(to_json(v));
            data << doc.dump(2) << "\n";
            code = v.positive ? kExitOk : kExitNegative;
        } else if (enumerate->parsed()) {
            Table t;
            if (kind == "quad-birational") {
                check_bound(bound, kMaxEnumerateBound, kind);
                t = enumerate_quad_birational(bound);
            } else if (kind == "multiquad-rational") {
                check_bound(bound, kMaxEnumerateBound, kind);
                t = enumerate_multiquad_rational(bound);
            } else if (kind == "class-groups") {
                check_bound(bound, ClassGroupBounds{}.max_positive, kind);
                t = enumerate_class_groups(bound);
            } else {
                check_bound(bound, kMaxEnumerateBound, kind);
                t = enumerate_prime_profiles(bound, depth);
            }
            Json header{{"schema", kSchemaVersion}, {"kind", kind}, {"bound", bound}};
            if (kind == "prime-profiles") header["depth"] = depth;
            t.write(data, format, header);
        } else if (verify->parsed()) {
            bool ok = false;
            data << verify_report(verify_bound, ok).dump(2) << "\n";
            code = ok ? kExitOk : kExitNegative;
        } else if (kprime->parsed()) {
            const OddPrime P(p), Q(q);
            const SquarefreeInt k = find_K_prime(P, Q);
            Json cands = Json::array();
            for (i64 m : {p, 2 * p}) {
                const SquarefreeInt s(m);
                cands.push_back({{"label", m}, {"discriminant", s.discriminant()}, {"kronecker", kronecker(s.discriminant(), q)}});
            }
            data << Json{{"schema", kSchemaVersion}, {"p", p}, {"q", q}, {"kprime", k.value()},
                         {"discriminant", k.discriminant()}, {"candidates", std::move(cands)}}
                        .dump(2)
                 << "\n";
        } else if (rayclass->parsed()) {
            if (table) {
                check_bound(table_bound, 10'000, "rayclass table");
                rayclass_table(table_bound, levels).write(data, rformat, {{"schema", kSchemaVersion}, {"kind", "rayclass"}, {"bound", table_bound}});
            } else {
                if (rp == 0 || rq == 0) throw InvalidArgument("rayclass needs --p and --q (or --table --bound N)");
                data << to_json(gal_N(OddPrime(rp), OddPrime(rq), levels)).dump(2) << "\n";
            }
        } else if (tower->parsed()) {
            data << to_json(plan_tower(OddPrime(tp), OddPrime(tq), choices, realize)).dump(2) << "\n";
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    if (output_path.empty()) {
        out << data.str();
    } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file || !(file << data.str())) {
            err << "error: cannot write " << output_path << "\n";
            return kExitError;
        }
    }
    return code;
}

}  // namespace tworat::cli
