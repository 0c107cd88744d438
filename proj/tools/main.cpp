// Copyright 2026 The beattyqe Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cctype>
#include <iostream>
#include <optional>
#include <string>

#include "bqe/analysis.hpp"
#include "bqe/beatty.hpp"
#include "bqe/json.hpp"
#include "bqe/logic.hpp"
#include "bqe/pattern.hpp"

namespace {

using bqe::exact::Int;
using bqe::json::ordered_json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string slope = "golden";
  bool json = false;
  long long bound = 100000;
  std::string window = "-10000:10000";
};

Int parse_integer(const std::string& text) {
  std::string t = text;
  size_t start = t.size() > 0 && (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (start == t.size())
    throw std::invalid_argument("expected an integer, got '" + text + "'");
  for (size_t i = start; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw std::invalid_argument("expected an integer, got '" + text + "'");
  return Int(t);
}

std::pair<Int, Int> parse_window(const std::string& text) {
  size_t colon = text.find(':', 1);  // allow a leading minus sign
  if (colon == std::string::npos)
    throw std::invalid_argument("window must be lo:hi");
  Int lo = parse_integer(text.substr(0, colon));
  Int hi = parse_integer(text.substr(colon + 1));
  if (lo > hi) throw std::invalid_argument("window must satisfy lo <= hi");
  return {lo, hi};
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(parse_integer(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

std::set<int> parse_index_set(const std::string& text, size_t n) {
  std::set<int> out;
  if (text == "-" || text.empty()) return out;
  for (const Int& v : parse_int_list(text)) {
    long idx = v.get_si();
    if (idx < 1 || static_cast<size_t>(idx) > n)
      throw std::invalid_argument("index set entry out of range: " +
                                  v.get_str());
    out.insert(static_cast<int>(idx));
  }
  return out;
}

ordered_json json_header(const std::string& command, const Options& opt) {
  ordered_json out;
  out["schema_version"] = 1;
  out["command"] = command;
  out["slope"] = opt.slope;
  return out;
}

void emit(const ordered_json& out) { std::cout << out.dump(2) << "\n"; }

// When the sentence is a single exists over pattern literals with concrete
// coefficients, surface the full pattern decision (certificate, witness,
// interval families); otherwise fall back to the generic evaluator.
std::optional<bqe::pattern::PatternQuery> extract_query(
    const bqe::logic::FormulaPtr& f) {
  namespace lg = bqe::logic;
  if (f->kind != lg::FKind::Exists) return std::nullopt;
  std::vector<const lg::Formula*> stack{f->args[0].get()};
  bqe::pattern::PatternQuery q;
  while (!stack.empty()) {
    const lg::Formula* cur = stack.back();
    stack.pop_back();
    bool positive = true;
    if (cur->kind == lg::FKind::Not && cur->args[0]->kind == lg::FKind::Atom) {
      positive = false;
      cur = cur->args[0].get();
    }
    if (cur->kind == lg::FKind::And) {
      for (const auto& arg : cur->args) stack.push_back(arg.get());
      continue;
    }
    if (cur->kind != lg::FKind::Atom || cur->atom.kind != lg::AtomKind::InP)
      return std::nullopt;
    Int k = 0;
    for (const auto& [v, c] : cur->atom.term.coeffs) {
      if (v != f->var) return std::nullopt;
      k = c;
    }
    q.a.push_back(cur->atom.term.constant);
    q.k.push_back(k);
    if (positive) q.I.insert(static_cast<int>(q.a.size()));
  }
  if (q.a.empty()) return std::nullopt;
  return q;
}

int cmd_beatty(const Options& opt, const bqe::beatty::BeattyContext& ctx,
               const std::string& arg) {
  Int n_max = parse_integer(arg);
  if (n_max < 1) throw std::invalid_argument("beatty: n_max must be >= 1");
  std::vector<Int> vals;
  for (Int n = 1; n <= n_max; ++n) vals.push_back(ctx.b(n));
  if (opt.json) {
    ordered_json out = json_header("beatty", opt);
    out["n_max"] = n_max.get_str();
    ordered_json arr = ordered_json::array();
    for (const Int& v : vals) arr.push_back(v.get_str());
    out["values"] = arr;
    emit(out);
  } else {
    for (size_t i = 0; i < vals.size(); ++i)
      std::cout << (i ? " " : "") << vals[i].get_str();
    std::cout << "\n";
  }
  return kExitTrue;
}

int cmd_sturmian(const Options& opt, const bqe::beatty::BeattyContext& ctx,
                 const std::string& arg) {
  Int len = parse_integer(arg);
  if (len < 1) throw std::invalid_argument("sturmian: len must be >= 1");
  auto word = ctx.sturmian_prefix(len.get_si());
  if (opt.json) {
    ordered_json out = json_header("sturmian", opt);
    out["len"] = len.get_str();
    std::string w;
    for (auto b : word) w += static_cast<char>('0' + b);
    out["word"] = w;
    emit(out);
  } else {
    for (size_t i = 0; i < word.size(); ++i)
      std::cout << (i ? " " : "") << static_cast<int>(word[i]);
    std::cout << "\n";
  }
  return kExitTrue;
}

int cmd_member(const Options& opt, const bqe::beatty::BeattyContext& ctx,
               const std::string& arg) {
  Int n = parse_integer(arg);
  bool member = ctx.member_P(n);
  if (opt.json) {
    ordered_json out = json_header("member", opt);
    out["n"] = n.get_str();
    out["member"] = member;
    emit(out);
  } else {
    std::cout << (member ? "true" : "false") << "\n";
  }
  return member ? kExitTrue : kExitFalse;
}

int cmd_decide(const Options& opt, const bqe::beatty::BeattyContext& ctx,
               const std::string& arg) {
  bqe::logic::FormulaPtr f = bqe::logic::parse(arg);
  if (!bqe::logic::free_vars(f).empty())
    throw std::invalid_argument("decide: formula must be a sentence");
  if (auto q = extract_query(f)) {
    bqe::pattern::Decision d = bqe::pattern::realizes_pattern(ctx, *q);
    if (opt.json) {
      ordered_json out = json_header("decide", opt);
      out["formula"] = bqe::logic::print(f);
      out["mode"] = "pattern";
      out["decision"] = bqe::json::decision_to_json(d);
      bqe::pattern::PatternQuery qn = bqe::pattern::normalize_query(*q);
      ordered_json fams = ordered_json::array();
      for (size_t i = 0; i < qn.size(); ++i) {
        ordered_json fam;
        fam["constraint"] = i + 1;
        fam["in_I"] = qn.in_I(i);
        fam["u_family"] =
            bqe::json::family_to_json(bqe::pattern::u_family(ctx, qn.a[i], qn.k[i]));
        fam["v_family"] =
            bqe::json::family_to_json(bqe::pattern::v_family(ctx, qn.a[i], qn.k[i]));
        fams.push_back(fam);
      }
      out["families"] = fams;
      emit(out);
    } else {
      std::cout << (d.realizable ? "realizable" : "unrealizable")
                << " certificate=" << bqe::pattern::certificate_name(d.certificate);
      if (d.witness) std::cout << " witness=" << d.witness->get_str();
      std::cout << "\n";
    }
    return d.realizable ? kExitTrue : kExitFalse;
  }
  bqe::logic::SentenceResult r = bqe::logic::eval_sentence(f, ctx, opt.bound);
  if (opt.json) {
    ordered_json out = json_header("decide", opt);
    out["formula"] = bqe::logic::print(f);
    out["mode"] = "sentence";
    out["value"] = r.value;
    out["exact"] = r.exact;
    emit(out);
  } else {
    std::cout << (r.value ? "true" : "false")
              << (r.exact ? "" : " (bounded search; inconclusive if false)")
              << "\n";
  }
  return r.value ? kExitTrue : kExitFalse;
}

int cmd_eliminate(const Options& opt, const bqe::beatty::BeattyContext& ctx,
                  const std::string& k_arg, const std::string& i_arg) {
  std::vector<Int> k = parse_int_list(k_arg);
  std::set<int> I = parse_index_set(i_arg, k.size());
  bqe::logic::FormulaPtr psi = bqe::logic::eliminate(k, I, ctx);
  if (opt.json) {
    ordered_json out = json_header("eliminate", opt);
    ordered_json karr = ordered_json::array();
    for (const Int& v : k) karr.push_back(v.get_str());
    out["k"] = karr;
    out["I"] = I;
    out["formula"] = bqe::logic::print(psi);
    out["ast"] = bqe::json::formula_to_json(psi);
    emit(out);
  } else {
    std::cout << bqe::logic::print(psi) << "\n";
  }
  return kExitTrue;
}

int cmd_gaps(const Options& opt, const bqe::beatty::BeattyContext& ctx,
             const std::string& arg) {
  bqe::logic::FormulaPtr f = bqe::logic::parse(arg);
  auto [lo, hi] = parse_window(opt.window);
  bqe::analysis::GapReport rep =
      bqe::analysis::gap_report(f, lo, hi, ctx, opt.bound);
  if (opt.json) {
    ordered_json out = json_header("gaps", opt);
    out["formula"] = bqe::logic::print(f);
    out["window"] = {{"lo", rep.lo.get_str()}, {"hi", rep.hi.get_str()}};
    out["points_found"] = rep.points_found;
    out["max_gap"] = rep.max_gap.get_str();
    out["gap_bound_estimate"] = rep.gap_bound_estimate.get_str();
    emit(out);
  } else {
    std::cout << "window=[" << rep.lo.get_str() << "," << rep.hi.get_str()
              << "] points=" << rep.points_found
              << " max_gap=" << rep.max_gap.get_str()
              << " estimate=" << rep.gap_bound_estimate.get_str() << "\n";
  }
  return kExitTrue;
}

int cmd_unstable(const Options& opt, const bqe::beatty::BeattyContext& ctx,
                 const std::string& arg) {
  Int n = parse_integer(arg);
  if (n < 1 || n > 1000) throw std::invalid_argument("unstable: n in [1,1000]");
  Int m = bqe::analysis::instability_witness(n, ctx);
  auto matrix = bqe::analysis::instability_matrix(n, m, ctx);
  if (opt.json) {
    ordered_json out = json_header("unstable", opt);
    out["n"] = n.get_str();
    out["m"] = m.get_str();
    ordered_json rows = ordered_json::array();
    for (const auto& row : matrix) {
      ordered_json r = ordered_json::array();
      for (bool v : row) r.push_back(v);
      rows.push_back(r);
    }
    out["order_matrix"] = rows;
    emit(out);
  } else {
    std::cout << "m=" << m.get_str() << "\n";
    for (const auto& row : matrix) {
      for (size_t j = 0; j < row.size(); ++j)
        std::cout << (j ? " " : "") << (row[j] ? 1 : 0);
      std::cout << "\n";
    }
  }
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact decisions about Beatty sets P_r = {floor(nr) : n != 0}"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.add_option("--slope", opt.slope,
                 "Slope spec: golden | sqrt:d | quad:p,q,s,d");
  app.add_flag("--json", opt.json, "Emit JSON output");
  app.add_option("--bound", opt.bound, "Search bound for inexact fallbacks");
  app.add_option("--window", opt.window, "Window lo:hi for gaps");

  std::string arg1, arg2;
  CLI::App* beatty = app.add_subcommand("beatty", "Print b(1..n_max)");
  beatty->add_option("n_max", arg1)->required();
  CLI::App* sturmian = app.add_subcommand("sturmian", "Print s_1..s_len");
  sturmian->add_option("len", arg1)->required();
  CLI::App* member = app.add_subcommand("member", "Decide n in P_r");
  member->add_option("n", arg1)->required();
  CLI::App* decide = app.add_subcommand("decide", "Decide a sentence");
  decide->add_option("formula", arg1)->required();
  CLI::App* eliminate =
      app.add_subcommand("eliminate", "Quantifier-eliminate a pattern family");
  eliminate->add_option("k", arg1, "Comma-separated coefficients")->required();
  eliminate->add_option("I", arg2, "Comma-separated 1-based indices, or -");
  CLI::App* gaps = app.add_subcommand("gaps", "Gap report over --window");
  gaps->add_option("formula", arg1)->required();
  CLI::App* unstable =
      app.add_subcommand("unstable", "Instability witness and order matrix");
  unstable->add_option("n", arg1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    auto slope = bqe::exact::IrrationalSlope::parse(opt.slope);
    bqe::beatty::BeattyContext ctx(slope);
    if (beatty->parsed()) return cmd_beatty(opt, ctx, arg1);
    if (sturmian->parsed()) return cmd_sturmian(opt, ctx, arg1);
    if (member->parsed()) return cmd_member(opt, ctx, arg1);
    if (decide->parsed()) return cmd_decide(opt, ctx, arg1);
    if (eliminate->parsed()) return cmd_eliminate(opt, ctx, arg1, arg2);
    if (gaps->parsed()) return cmd_gaps(opt, ctx, arg1);
    if (unstable->parsed()) return cmd_unstable(opt, ctx, arg1);
  } catch (const bqe::logic::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
