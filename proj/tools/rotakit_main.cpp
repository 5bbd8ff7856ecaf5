// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include <CLI11.hpp>

#include "rotakit/commands.hpp"

namespace {

void add_tolerance_options(CLI::App* cmd, rotakit::ToleranceOverride& tol)
{
    cmd->add_option("--tol-geom", tol.eps_geom,
                    "override geometric tolerance (relative)");
    cmd->add_option("--tol-dm", tol.eps_dm,
                    "override diameter comparison tolerance (relative)");
}

void add_body_options(CLI::App* cmd, rotakit::BodyRef& ref)
{
    cmd->add_option("--body", ref.body_id, "corpus body id, e.g. E_9");
    cmd->add_option("--in", ref.file, "polygon file (one 'x y' pair per line)");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rotakit: rotational symmetries and diameter-minimal standard "
                 "partitions of convex polygons"};
    app.require_subcommand(1);

    rotakit::GenOptions gen;
    auto* cgen = app.add_subcommand("gen", "write the evaluation corpus to a directory");
    cgen->add_option("--out", gen.out_dir, "output directory")->required();
    cgen->add_option("--seed", gen.seed, "corpus seed (default 42)");

    rotakit::AnalyzeOptions an;
    auto* can = app.add_subcommand("analyze", "symmetry facts for one body or the corpus");
    add_body_options(can, an.ref);
    can->add_flag("--all", an.all, "analyze every corpus body");
    can->add_option("--filter", an.filter,
                    "with --all: comma-joined clauses over kC, chi, n, generator, id");
    can->add_option("--seed", an.seed, "corpus seed (default 42)");
    can->add_option("--out", an.out_csv, "write CSV to this file instead of stdout");
    add_tolerance_options(can, an.tol);

    rotakit::ChainOptions ch;
    auto* cch = app.add_subcommand("chain", "max subset diameters over all symmetry degrees");
    add_body_options(cch, ch.ref);
    cch->add_option("--seed", ch.seed, "corpus seed (default 42)");
    cch->add_option("--out", ch.out_csv, "also write the chain as CSV");
    add_tolerance_options(cch, ch.tol);

    rotakit::VerifyOptions ver;
    auto* cver = app.add_subcommand("verify", "check partition invariants over the corpus");
    cver->add_option("--seed", ver.seed, "corpus seed (default 42)");
    cver->add_option("--filter", ver.filter, "restrict to matching corpus bodies");
    cver->add_flag("--verbose", ver.verbose, "print a line per verified body");
    add_tolerance_options(cver, ver.tol);

    rotakit::Search2Options s2;
    auto* cs2 = app.add_subcommand("search2", "sweep center chords against the standard 2-partition");
    add_body_options(cs2, s2.ref);
    cs2->add_option("--angles", s2.angles, "sweep grid size (default 720)");
    cs2->add_option("--seed", s2.seed, "corpus seed (default 42)");
    cs2->add_option("--out", s2.out_csv, "write per-angle CSV");
    cs2->add_option("--svg", s2.out_svg, "render standard vs best chord");
    add_tolerance_options(cs2, s2.tol);

    rotakit::SearchKOptions sk;
    auto* csk = app.add_subcommand("searchk", "random spoke partitions against the closed form (k >= 3)");
    add_body_options(csk, sk.ref);
    csk->add_option("--k", sk.k, "partition degree, k >= 3")->required();
    csk->add_option("--samples", sk.samples, "random draws (default 10000)");
    csk->add_option("--seed", sk.seed, "search seed (default 42)");
    csk->add_option("--margin", sk.margin, "relative beat margin (default 1e-4)");
    add_tolerance_options(csk, sk.tol);

    rotakit::RenderOptions ren;
    auto* cren = app.add_subcommand("render", "draw standard partitions as SVG panels");
    add_body_options(cren, ren.ref);
    cren->add_option("--k", ren.ks,
                     "degrees to draw, comma separated (default: all symmetry degrees)")
        ->delimiter(',');
    cren->add_option("--out", ren.out_svg, "output SVG file")->required();
    cren->add_option("--seed", ren.seed, "corpus seed (default 42)");
    add_tolerance_options(cren, ren.tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cgen->parsed()) return rotakit::run_gen(gen, std::cout, std::cerr);
    if (can->parsed()) return rotakit::run_analyze(an, std::cout, std::cerr);
    if (cch->parsed()) return rotakit::run_chain(ch, std::cout, std::cerr);
    if (cver->parsed()) return rotakit::run_verify(ver, std::cout, std::cerr);
    if (cs2->parsed()) return rotakit::run_search2(s2, std::cout, std::cerr);
    if (csk->parsed()) return rotakit::run_searchk(sk, std::cout, std::cerr);
    if (cren->parsed()) return rotakit::run_render(ren, std::cout, std::cerr);
    return 2;
}
