#include "pgcanon/commands.hpp"

#include <iomanip>
#include <iostream>

#include "pgcanon/error.hpp"
#include "pgcanon/generators.hpp"
#include "pgcanon/io.hpp"
#include "pgcanon/rank.hpp"
#include "pgcanon/selftest.hpp"

namespace pgc {

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_internal(e.code()) ? kExitInternal : kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int cmd_order(const std::string& path, const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const GeneratorSet s = to_generator_set(parse_group_file(read_file(path)));
        const BigCard order = build_chain(s).order();
        if (flags.oracle) {
          try {
            const auto closure = closure_bruteforce(s, flags.cap);
            if (BigCard(closure.size()) != order) {
              err << "oracle mismatch: closure has " << closure.size() << " elements\n";
              return int(kExitOracle);
            }
          } catch (const Error& e) {
            if (e.code() != ErrorCode::CapExceeded) throw;
            err << "note: closure oracle skipped, group larger than cap " << flags.cap << "\n";
          }
        }
        out << to_decimal(order) << "\n";
        return int(kExitOk);
      },
      err);
}

int cmd_member(const std::string& path, const std::string& perm, const GlobalFlags& flags,
               std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const GeneratorSet s = to_generator_set(parse_group_file(read_file(path)));
        const std::vector<Point> images = parse_image_sequence(perm);
        if (images.size() != s.domain.size)
          throw Error(ErrorCode::LengthMismatch, "permutation of length " + std::to_string(images.size()) +
                                                     " for a group on " + std::to_string(s.domain.size) +
                                                     " points");
        const Permutation x = Permutation::from_images(images);
        const bool member = build_chain(s).contains(x);
        if (flags.paranoid && membership_by_order(s, x) != member) {
          err << "oracle mismatch: membership by order disagrees\n";
          return int(kExitOracle);
        }
        out << (member ? "true" : "false") << "\n";
        return int(kExitOk);
      },
      err);
}

int cmd_rank(const std::string& path, const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const MatrixFile f = parse_matrix_file(read_file(path));
        const MatrixModP m(f.modulus, f.rows);
        const std::size_t r = rank_p(m);
        if (flags.oracle && gauss_rank(m) != r) {
          err << "oracle mismatch: elimination gives rank " << gauss_rank(m) << "\n";
          return int(kExitOracle);
        }
        out << r << "\n";
        return int(kExitOk);
      },
      err);
}

std::string canon_text(const std::string& text, const GlobalFlags& flags, std::ostream& err,
                       int& exit_code) {
  exit_code = kExitOk;
  const AbelianColoredGraph g = validate(parse_colored_graph(text));
  const CanonicalForm form = canonize(g);
  if (flags.paranoid) {
    CanonOptions ref;
    ref.reference_emptiness = true;
    if (canonize(g, ref) != form) {
      err << "oracle mismatch: reference emptiness path disagrees\n";
      exit_code = kExitOracle;
    }
  }
  if (flags.oracle) {
    try {
      if (canon_oracle(g, flags.cap) != form) {
        err << "oracle mismatch: brute force gives a different form\n";
        exit_code = kExitOracle;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
      err << "note: canonization oracle skipped, more than " << flags.cap << " anchor tuples\n";
    }
  }
  return serialize(form);
}

int cmd_canon(const std::string& path, const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        int code = kExitOk;
        const std::string text = canon_text(read_file(path), flags, err, code);
        if (code == kExitOk) out << text << "\n";
        return code;
      },
      err);
}

int cmd_gen(const GenParams& params, const GlobalFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        RawColoredGraph g;
        std::string text;
        if (params.kind == "cyclic") {
          CyclicParams p;
          p.class_sizes = params.sizes;
          p.density = params.density;
          p.intra_density = params.intra_density;
          p.cycle = params.cycle;
          p.undirected = params.undirected;
          p.mixed = params.mixed;
          g = gen_cyclic(p, flags.seed);
        } else if (params.kind == "bipartite") {
          if (params.sizes.size() != 2) throw Error(ErrorCode::ParseError, "bipartite needs two sizes");
          g = gen_bipartite(params.sizes[0], params.sizes[1], params.density, flags.seed);
        } else if (params.kind == "cfi") {
          const BaseGraph base = base_graph(params.base);
          g = gen_cfi(base, params.twisted, params.twist_edge);
          if (params.relabel) g = relabel(g, params.relabel_seed);
          validate(g);
          out << serialize(g, base, params.twisted, params.twist_edge) << "\n";
          return int(kExitOk);
        } else {
          throw Error(ErrorCode::ParseError, "unknown kind '" + params.kind + "'");
        }
        if (params.relabel) g = relabel(g, params.relabel_seed);
        validate(g);
        out << serialize(g) << "\n";
        return int(kExitOk);
      },
      err);
}

int cmd_selftest(const GlobalFlags& flags, bool corrupt_order, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        std::vector<SuiteResult> results;
        const auto add = [&](SuiteResult r) {
          out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(36) << r.name << " "
              << std::fixed << std::setprecision(2) << r.seconds << "s  " << r.detail << std::endl;
          results.push_back(std::move(r));
        };
        const std::uint64_t s = flags.seed;
        add(factorial_suite(3, 9));
        for (auto& r : closure_suite(100, s)) add(std::move(r));
        add(first_isomorphism_suite(40, s));
        add(rank_suite(200, s));
        add(solvability_suite(100, 30, s));
        CanonOptions opt;
        opt.corrupt_order = corrupt_order;
        add(canon_oracle_suite(40, s, opt));
        add(io_suite(20, s));
        for (auto& r : structural_suite(20, s)) add(std::move(r));
        add(cfi_suite(3, s));
        // Seed sweep for invariance.
        for (std::uint64_t k = 1; k <= 20; ++k) {
          SuiteResult r = invariance_suite(3, 5, k);
          r.name += " seed " + std::to_string(k);
          add(std::move(r));
        }
        const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
        out << (failed == 0 ? "all suites passed" : std::to_string(failed) + " suite(s) failed") << "\n";
        return failed == 0 ? int(kExitOk) : int(kExitOracle);
      },
      err);
}

}  // namespace pgc
