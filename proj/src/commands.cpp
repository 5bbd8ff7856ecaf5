// SPDX-License-Identifier: Apache-2.0
#include "rotakit/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rotakit/errors.hpp"
#include "rotakit/partition.hpp"
#include "rotakit/polygon_io.hpp"
#include "rotakit/report.hpp"
#include "rotakit/search.hpp"
#include "rotakit/symmetry.hpp"

namespace rotakit {

namespace fs = std::filesystem;

Tolerance ToleranceOverride::apply(Tolerance base) const
{
    if (eps_geom > 0) base.eps_geom = eps_geom;
    if (eps_dm > 0) base.eps_dm = eps_dm;
    base.validate();
    return base;
}

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn)
{
    try {
        return fn();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
}

void deliver(const std::string& text, const std::string& path, std::ostream& fallback)
{
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write " + path);
    f << text;
}

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t c = line.find(',', pos);
        if (c == std::string::npos) {
            out.push_back(line.substr(pos));
            break;
        }
        out.push_back(line.substr(pos, c - pos));
        pos = c + 1;
    }
    return out;
}

bool is_analytic(const Tolerance& t)
{
    return t.eps_geom == Tolerance::analytic().eps_geom
           && t.eps_dm == Tolerance::analytic().eps_dm;
}

ResolvedBody from_manifest_dir(const std::string& dir, const std::string& id,
                               const ToleranceOverride& tol)
{
    fs::path mpath = fs::path(dir) / "manifest.csv";
    std::ifstream in(mpath);
    if (!in) throw ParseError("cannot open corpus manifest " + mpath.string());
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_fields(line);
        if (f.size() < 10 || f[0] != id) continue;

        ResolvedBody rb;
        rb.id = id;
        rb.generator = f[2];
        Tolerance base =
            (f[3] == "analytic") ? Tolerance::analytic() : Tolerance::generated();
        rb.tol = tol.apply(base);
        rb.body = load_body((fs::path(dir) / f[1]).string(), rb.tol);
        if (!f[4].empty()) {
            SectorProfile p;
            p.m = std::stoi(f[4]);
            p.samples = std::stoi(f[5]);
            p.bump = bump_from_name(f[6]).value_or(BumpKind::arch);
            p.eps = std::stod(f[7]);
            p.seed = std::stoull(f[9]);
            rb.profile = p;
            rb.eps_used = std::stod(f[8]);
        }
        return rb;
    }
    throw std::invalid_argument("body id '" + id + "' not found in corpus manifest "
                                + mpath.string());
}

double entry_value(const ChainEntry& e) { return e.formula ? *e.formula : e.brute; }

// 2-partition along an arbitrary chord direction, for rendering sweeps.
StandardPartition chord_partition(const ConvexBody& body, double angle)
{
    Point2 u{std::cos(angle), std::sin(angle)};
    StandardPartition part;
    part.k = 2;
    part.center = body.center;
    part.endpoints.push_back(ray_boundary_intersection(body, body.center, u).point);
    part.endpoints.push_back(
        ray_boundary_intersection(body, body.center, Point2{-u.x, -u.y}).point);
    Point2 n = perp(u);
    part.subsets.push_back(clip_halfplane(body.vertices, body.center, n));
    part.subsets.push_back(
        clip_halfplane(body.vertices, body.center, Point2{-n.x, -n.y}));
    return part;
}

}  // namespace

ResolvedBody resolve_body(const BodyRef& ref, std::uint64_t seed,
                          const ToleranceOverride& tol)
{
    if (!ref.file.empty() && !ref.body_id.empty())
        throw std::invalid_argument("give either a body id or a file, not both");

    if (!ref.file.empty()) {
        ResolvedBody rb;
        rb.id = fs::path(ref.file).stem().string();
        rb.generator = "file";
        rb.tol = tol.apply(Tolerance::generated());
        rb.body = load_body(ref.file, rb.tol);
        return rb;
    }
    if (ref.body_id.empty())
        throw std::invalid_argument("a body id or an input file is required");

    if (const char* dir = std::getenv("ROTAKIT_CORPUS"); dir && *dir)
        return from_manifest_dir(dir, ref.body_id, tol);

    for (auto& c : build_corpus(seed)) {
        if (c.id != ref.body_id) continue;
        ResolvedBody rb;
        rb.id = c.id;
        rb.generator = c.generator;
        rb.tol = tol.apply(c.tol);
        rb.body = std::move(c.body);
        rb.profile = c.profile;
        rb.eps_used = c.eps_used;
        return rb;
    }
    throw std::invalid_argument("unknown body id '" + ref.body_id + "'");
}

int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&]() {
        if (opt.out_dir.empty())
            throw std::invalid_argument("gen needs an output directory");
        fs::create_directories(opt.out_dir);

        auto corpus = build_corpus(opt.seed);
        std::ofstream manifest(fs::path(opt.out_dir) / "manifest.csv",
                               std::ios::binary);
        if (!manifest) throw ParseError("cannot write manifest in " + opt.out_dir);
        manifest << "id,file,generator,tol,m,samples,bump,eps,eps_used,seed\n";

        for (const auto& c : corpus) {
            std::string fname = c.id + ".poly";
            std::string comment = c.id + " generator=" + c.generator;
            if (c.profile) comment += " " + describe_profile(*c.profile, c.eps_used);
            write_polygon_file((fs::path(opt.out_dir) / fname).string(),
                               c.body.vertices, comment);
            manifest << c.id << ',' << fname << ',' << c.generator << ','
                     << (is_analytic(c.tol) ? "analytic" : "generated") << ',';
            if (c.profile) {
                manifest << c.profile->m << ',' << c.profile->samples << ','
                         << bump_name(c.profile->bump) << ','
                         << format_value(c.profile->eps) << ','
                         << format_value(c.eps_used) << ',' << c.profile->seed;
            } else {
                manifest << ",,,,,";
            }
            manifest << '\n';
        }
        out << "wrote " << corpus.size() << " bodies to " << opt.out_dir << '\n';
        return kOk;
    });
}

int run_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&]() {
        std::ostringstream buf;
        write_analysis_header(buf);
        if (opt.all) {
            Filter f = parse_filter(opt.filter);
            for (const auto& c : build_corpus(opt.seed)) {
                Tolerance t = opt.tol.apply(c.tol);
                auto prof = detect_symmetry(c.body, t);
                if (!filter_matches(f, c.id, c.generator, prof,
                                    c.body.vertices.size()))
                    continue;
                write_analysis_row(buf, c.id, c.body, prof);
            }
        } else {
            auto rb = resolve_body(opt.ref, opt.seed, opt.tol);
            auto prof = detect_symmetry(rb.body, rb.tol);
            write_analysis_row(buf, rb.id, rb.body, prof);
        }
        deliver(buf.str(), opt.out_csv, out);
        return kOk;
    });
}

int run_chain(const ChainOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&]() {
        auto rb = resolve_body(opt.ref, opt.seed, opt.tol);
        auto rep = chain_report(rb.body, rb.tol);

        out << "body: " << rb.id << "  kC=" << rep.profile.max_degree
            << " chi=" << rep.profile.min_degree << "  R=" << format_value(rep.R)
            << " r=" << format_value(rep.r) << '\n';
        for (const auto& e : rep.entries)
            out << "  k=" << e.k << "  formula="
                << (e.formula ? format_value(*e.formula) : std::string("na"))
                << "  brute=" << format_value(e.brute)
                << "  equals_R=" << (e.equals_R ? "true" : "false") << '\n';
        out << "equality_chain=" << (rep.equality_chain ? "true" : "false")
            << " unique_minimum=" << (rep.unique_minimum ? "true" : "false")
            << '\n';
        if (rep.profile.min_degree >= 3) {
            auto cls = classify_equality_chain(rep);
            out << "equality predicates agree: "
                << (cls.observed_equality_chain ? "all-equal chain"
                                                : "strictly dropping chain")
                << '\n';
        }
        if (!opt.out_csv.empty()) {
            std::ostringstream buf;
            write_chain_csv(buf, rb.id, rep);
            deliver(buf.str(), opt.out_csv, out);
        }
        return kOk;
    });
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&]() {
        Filter f = parse_filter(opt.filter);
        auto corpus = build_corpus(opt.seed);
        std::size_t checked = 0, failures = 0;

        for (const auto& c : corpus) {
            Tolerance t = opt.tol.apply(c.tol);
            try {
                auto prof = detect_symmetry(c.body, t);  // closure checked inside
                if (!filter_matches(f, c.id, c.generator, prof,
                                    c.body.vertices.size()))
                    continue;
                ++checked;

                const double R = c.body.circumradius;
                for (int k : prof.divisors) {
                    auto part = standard_partition(c.body, k, t);
                    double brute = dM_bruteforce(part);
                    if (k >= 3) {
                        double form = dM_formula(c.body, k);
                        if (std::abs(form - brute) > t.eps_dm * R)
                            throw TheoremViolation(
                                "closed form disagrees with brute force at k="
                                + std::to_string(k));
                    }
                    if (!supporting_line_check(c.body, part, t))
                        throw TheoremViolation(
                            "supporting line fails at spoke endpoints, k="
                            + std::to_string(k));
                }

                if (prof.is_multi) {
                    auto rep = chain_report(c.body, t);
                    if (prof.min_degree >= 3) {
                        classify_equality_chain(rep);
                        double minv = entry_value(rep.entries.back());
                        bool observed = true;
                        for (std::size_t i = 0; i + 1 < rep.entries.size(); ++i)
                            if (entry_value(rep.entries[i]) - minv <= t.eps_dm * R)
                                observed = false;
                        if (observed != rep.unique_minimum)
                            throw TheoremViolation(
                                "unique-minimum rule disagrees with the values");
                    }
                }
            } catch (const Error& e) {
                ++failures;
                out << "FAIL " << c.id << ": " << e.what() << '\n';
                continue;
            }
            if (opt.verbose) out << "ok " << c.id << '\n';
        }
        out << "verified " << checked << " bodies, " << failures << " failed\n";
        return failures ? kFailure : kOk;
    });
}

int run_search2(const Search2Options& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&]() {
        auto rb = resolve_body(opt.ref, opt.seed, opt.tol);
        auto part = standard_partition(rb.body, 2, rb.tol);
        double std_dm = dM_bruteforce(part);
        double std_angle =
            std::fmod(polar_angle(part.endpoints[0] - rb.body.center),
                      std::numbers::pi);

        auto res = sweep_center_chords(rb.body, opt.angles,
                                       std::span<const double>(&std_angle, 1));

        out << "body: " << rb.id;
        if (rb.profile) out << "  (" << describe_profile(*rb.profile, rb.eps_used) << ')';
        out << '\n';
        out << "standard dM(P_2) = " << format_value(std_dm) << " at chord angle "
            << format_value(std_angle) << '\n';
        out << "sweep best       = " << format_value(res.best_value)
            << " at chord angle " << format_value(res.best_angle) << " ("
            << res.samples.size() << " angles)\n";
        bool better =
            res.best_value < std_dm - rb.tol.eps_dm * rb.body.circumradius;
        out << "sweep beats standard: " << (better ? "true" : "false")
            << " (gap " << format_value(std_dm - res.best_value) << ")\n";

        if (!opt.out_csv.empty()) {
            std::ostringstream buf;
            write_sweep_csv(buf, rb.id, res);
            deliver(buf.str(), opt.out_csv, out);
        }
        if (!opt.out_svg.empty()) {
            std::vector<PanelSpec> panels;
            auto std_panel = make_panel(rb.body, part);
            std_panel.label = "standard " + std_panel.label;
            panels.push_back(std_panel);
            auto best_panel =
                make_panel(rb.body, chord_partition(rb.body, res.best_angle));
            best_panel.label = "best sweep " + best_panel.label;
            panels.push_back(best_panel);
            std::ofstream svg(opt.out_svg, std::ios::binary);
            if (!svg) throw ParseError("cannot write " + opt.out_svg);
            render_partitions_svg(svg, rb.body, panels);
            out << "wrote " << opt.out_svg << '\n';
        }
        return kOk;
    });
}

int run_searchk(const SearchKOptions& opt, std::ostream& out, std::ostream& err)
{
    if (opt.k < 3) {
        err << "searchk requires k >= 3; chord 2-partitions are covered by "
               "search2\n";
        return kUsage;
    }
    return guarded(err, [&]() {
        auto rb = resolve_body(opt.ref, opt.seed, opt.tol);
        if (!is_k_symmetric(rb.body, opt.k, rb.tol))
            throw NotSymmetric("body " + rb.id + " is not "
                               + std::to_string(opt.k) + "-fold symmetric");

        auto res = search_min_dM(rb.body, opt.k, opt.samples, opt.seed, opt.margin);
        out << "body: " << rb.id << "  k=" << opt.k << '\n';
        out << "closed form  = " << format_value(res.formula_value) << '\n';
        out << "search best  = " << format_value(res.best_value) << "  ("
            << res.samples << " samples, " << res.evaluations
            << " evaluations)\n";
        require_minimality(res);
        out << "no spoke partition beat the closed form (margin "
            << format_value(res.margin) << ")\n";
        return kOk;
    });
}

int run_render(const RenderOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&]() {
        if (opt.out_svg.empty())
            throw std::invalid_argument("render needs an output file");
        auto rb = resolve_body(opt.ref, opt.seed, opt.tol);

        std::vector<int> ks = opt.ks;
        if (ks.empty()) ks = detect_symmetry(rb.body, rb.tol).divisors;

        std::vector<PanelSpec> panels;
        for (int k : ks)
            panels.push_back(
                make_panel(rb.body, standard_partition(rb.body, k, rb.tol)));

        std::ofstream svg(opt.out_svg, std::ios::binary);
        if (!svg) throw ParseError("cannot write " + opt.out_svg);
        render_partitions_svg(svg, rb.body, panels);
        out << "wrote " << opt.out_svg << " (" << panels.size() << " panels)\n";
        return kOk;
    });
}

}  // namespace rotakit
