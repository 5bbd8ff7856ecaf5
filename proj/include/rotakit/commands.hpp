// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rotakit/generator.hpp"
#include "rotakit/geometry.hpp"

namespace rotakit {

// CLI subcommand entry points. They are plain functions over option structs
// so tests can drive them without spawning processes. Return value is the
// process exit code: 0 success, 1 failed checks or bad data, 2 bad usage.

struct ToleranceOverride {
    double eps_geom{-1.0};  // < 0 keeps the body's default
    double eps_dm{-1.0};
    Tolerance apply(Tolerance base) const;
};

// A body is named either by corpus id or by polygon file path.
struct BodyRef {
    std::string body_id;
    std::string file;
};

struct ResolvedBody {
    std::string id;
    std::string generator;
    ConvexBody body;
    Tolerance tol;
    std::optional<SectorProfile> profile;
    double eps_used{0.0};
};

// --body resolves against the generated corpus; when the ROTAKIT_CORPUS
// environment variable names a directory written by `gen`, bodies are read
// from its files instead of being rebuilt.
ResolvedBody resolve_body(const BodyRef& ref, std::uint64_t seed,
                          const ToleranceOverride& tol);

struct GenOptions {
    std::string out_dir;
    std::uint64_t seed{42};
};

struct AnalyzeOptions {
    BodyRef ref;               // ignored when all is set
    bool all{false};
    std::string filter;        // only with all
    std::uint64_t seed{42};
    ToleranceOverride tol;
    std::string out_csv;       // empty: stdout
};

struct ChainOptions {
    BodyRef ref;
    std::uint64_t seed{42};
    ToleranceOverride tol;
    std::string out_csv;
};

struct VerifyOptions {
    std::uint64_t seed{42};
    std::string filter;
    ToleranceOverride tol;
    bool verbose{false};
};

struct Search2Options {
    BodyRef ref;
    int angles{720};
    std::uint64_t seed{42};
    ToleranceOverride tol;
    std::string out_csv;
    std::string out_svg;
};

struct SearchKOptions {
    BodyRef ref;
    int k{3};
    std::size_t samples{10000};
    std::uint64_t seed{42};
    double margin{1e-4};
    ToleranceOverride tol;
};

struct RenderOptions {
    BodyRef ref;
    std::vector<int> ks;  // empty: every symmetry degree
    std::string out_svg;
    std::uint64_t seed{42};
    ToleranceOverride tol;
};

int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);
int run_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);
int run_chain(const ChainOptions& opt, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int run_search2(const Search2Options& opt, std::ostream& out, std::ostream& err);
int run_searchk(const SearchKOptions& opt, std::ostream& out, std::ostream& err);
int run_render(const RenderOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace rotakit
