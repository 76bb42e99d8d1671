// Command-line driver: enumerate and present maximal subalgebras of type-A
// path algebras, compute orbit and isomorphism partitions, run the
// orbit-vs-isoclass verification sweep, and audit the word equation
// w3 * star(w2) = w2 * w3.
//
// Exit codes: 0 success, 1 a verification property failed, 2 usage error.

#include "msa/verify.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

struct Output {
  std::string path;  // empty = stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << "\n";
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
  }
};

std::string relation_str(const msa::Presentation& P, const msa::Relation& rel) {
  std::string s;
  bool first = true;
  for (const auto& t : rel) {
    msa::Rational c = t.coeff;
    if (!first) s += (c > 0 ? " + " : " - ");
    if (first && c < 0) s += "-";
    msa::Rational a = abs(c);
    if (a != 1) s += msa::rational_str(a) + "*";
    for (std::size_t k = 0; k < t.arrows.size(); ++k) {
      if (k) s += "*";
      s += P.gamma.arrows[static_cast<std::size_t>(t.arrows[k])].name;
    }
    first = false;
  }
  return s;
}

std::string quiver_str(const msa::Quiver& q) {
  std::string s = "vertices {";
  for (std::size_t i = 0; i < q.vertices.size(); ++i) {
    if (i) s += ", ";
    s += q.vertices[i].str();
  }
  s += "}; arrows {";
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    if (i) s += ", ";
    const auto& a = q.arrows[i];
    s += a.name + ": " + q.vertices[static_cast<std::size_t>(a.src)].str() + "->" +
         q.vertices[static_cast<std::size_t>(a.tgt)].str();
  }
  return s + "}";
}

nlohmann::json rep_json(const msa::PathAlgebra& B, const msa::Representative& r,
                        bool with_presentation) {
  nlohmann::json j;
  j["tag"] = r.tag.str();
  j["dim"] = r.algebra.dim();
  j["radical_dims"] = r.algebra.radical_power_dims();
  msa::Quiver ext = msa::ext_quiver(r.algebra);
  j["connected"] = ext.connected();
  j["ext_quiver"] = msa::quiver_to_json(ext);
  if (with_presentation) {
    msa::Presentation P = msa::present_representative(B, r.tag);
    msa::check_presentation(P, r.algebra);
    j["presentation"] = msa::presentation_to_json(P);
  }
  return j;
}

int cmd_enumerate(const std::string& word, const std::string& format, const Output& out,
                  bool with_presentation) {
  msa::BinaryWord w = msa::BinaryWord::parse(word);
  msa::Quiver Q = msa::word_to_quiver(w);
  msa::PathAlgebra B(Q);
  auto reps = msa::enumerate_representatives(B);
  if (format == "json") {
    nlohmann::json j;
    j["word"] = w.str();
    j["n"] = w.n_vertices();
    j["dim_ambient"] = B.dim();
    j["reps"] = nlohmann::json::array();
    for (const auto& r : reps) j["reps"].push_back(rep_json(B, r, with_presentation));
    out.write(j.dump(2));
    return 0;
  }
  std::ostringstream os;
  os << "word \"" << w.str() << "\"  (n = " << w.n_vertices() << ", dim kQ = " << B.dim() << ", "
     << reps.size() << " representatives)\n";
  for (const auto& r : reps) {
    msa::Quiver ext = msa::ext_quiver(r.algebra);
    os << "  " << r.tag.str() << "  dim " << r.algebra.dim()
       << (ext.connected() ? "" : "  [disconnected]") << "\n";
    os << "    ext quiver: " << quiver_str(ext) << "\n";
    if (with_presentation) {
      msa::Presentation P = msa::present_representative(B, r.tag);
      msa::check_presentation(P, r.algebra);
      os << "    presentation: " << quiver_str(P.gamma) << "\n";
      if (P.relations.empty()) {
        os << "    relations: none\n";
      } else {
        os << "    relations:";
        for (const auto& rel : P.relations) os << " (" << relation_str(P, rel) << ")";
        os << "\n";
      }
    }
  }
  out.write(os.str());
  return 0;
}

int cmd_orbits(const std::string& word, const std::string& format, const Output& out) {
  msa::BinaryWord w = msa::BinaryWord::parse(word);
  msa::Quiver Q = msa::word_to_quiver(w);
  msa::PathAlgebra B(Q);
  auto reps = msa::enumerate_representatives(B);
  std::vector<msa::RepTag> tags;
  for (const auto& r : reps) tags.push_back(r.tag);
  msa::OrbitPartition part = msa::orbits(Q, tags);
  if (format == "json") {
    nlohmann::json j;
    j["word"] = w.str();
    j["aut_order"] = msa::aut_group(Q).size();
    j["orbits"] = nlohmann::json::array();
    for (const auto& blk : part.blocks) {
      nlohmann::json b = nlohmann::json::array();
      for (const auto& t : blk) b.push_back(t.str());
      j["orbits"].push_back(b);
    }
    out.write(j.dump(2));
    return 0;
  }
  std::ostringstream os;
  os << "word \"" << w.str() << "\"  |Aut(Q)| = " << msa::aut_group(Q).size() << "\n";
  for (const auto& blk : part.blocks) {
    os << "  {";
    for (std::size_t i = 0; i < blk.size(); ++i) os << (i ? ", " : "") << blk[i].str();
    os << "}\n";
  }
  out.write(os.str());
  return 0;
}

int cmd_isoclasses(const std::string& word, const std::string& format, const Output& out) {
  msa::BinaryWord w = msa::BinaryWord::parse(word);
  msa::VerificationReport rep = msa::verify_word(w);
  if (format == "json") {
    out.write(msa::report_to_json(rep).dump(2));
    return rep.pass ? 0 : 1;
  }
  std::ostringstream os;
  os << "word \"" << w.str() << "\"  isoclasses on connected representatives:\n";
  for (const auto& blk : rep.isoclasses) {
    os << "  {";
    for (std::size_t i = 0; i < blk.size(); ++i) os << (i ? ", " : "") << blk[i].str();
    os << "}\n";
  }
  for (const auto& note : rep.notes) os << "  note: " << note << "\n";
  os << (rep.pass ? "verdict: pass" : "verdict: FAIL " + rep.counterexample) << "\n";
  out.write(os.str());
  return rep.pass ? 0 : 1;
}

int cmd_verify(int max_n, int workers, const std::string& format, const Output& out) {
  auto reports = msa::verify_theorem(max_n, workers);
  int failures = 0;
  long certificates = 0;
  for (const auto& r : reports) {
    if (!r.pass) ++failures;
    certificates += r.certificates_verified;
  }
  if (format == "json") {
    nlohmann::json j;
    j["max_n"] = max_n;
    j["words"] = reports.size();
    j["failures"] = failures;
    j["certificates_verified"] = certificates;
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(msa::report_to_json(r));
    out.write(j.dump(2));
  } else {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << (r.pass ? "pass" : "FAIL") << "  n=" << r.n << "  \"" << r.word.str() << "\"  ("
         << r.reps.size() << " reps, " << r.orbit_partition.blocks.size() << " orbits, "
         << r.isoclasses.size() << " isoclasses)";
      if (!r.pass) os << "  <-- " << r.counterexample;
      os << "\n";
    }
    os << reports.size() << " words, " << failures << " failures, " << certificates
       << " isomorphism certificates verified\n";
    out.write(os.str());
  }
  return failures == 0 ? 0 : 1;
}

int cmd_words(int max_len, const std::string& format, const Output& out) {
  auto sols = msa::word_equation_solutions(max_len);
  bool odd_w3 = false;
  bool all_symmetric = true;
  for (const auto& [w2, w3] : sols) {
    if (w3.length() % 2 != 0) odd_w3 = true;
    if (!(msa::star(w3) == w3)) all_symmetric = false;
  }
  bool ok = !odd_w3 && all_symmetric;
  if (format == "json") {
    nlohmann::json j;
    j["max_total_len"] = max_len;
    j["solutions"] = nlohmann::json::array();
    for (const auto& [w2, w3] : sols)
      j["solutions"].push_back({{"w2", w2.str()}, {"w3", w3.str()}});
    j["no_odd_w3"] = !odd_w3;
    j["all_w3_star_symmetric"] = all_symmetric;
    out.write(j.dump(2));
  } else {
    std::ostringstream os;
    os << "solutions of w3*star(w2) = w2*w3 with len(w2) >= 1, total length <= " << max_len
       << ": " << sols.size() << "\n";
    for (const auto& [w2, w3] : sols)
      os << "  w2 = \"" << w2.str() << "\"  w3 = \"" << w3.str() << "\"\n";
    os << "no solution with odd len(w3): " << (odd_w3 ? "VIOLATED" : "holds") << "\n";
    os << "every solution has star(w3) = w3: " << (all_symmetric ? "holds" : "VIOLATED") << "\n";
    out.write(os.str());
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal subalgebras of type-A path algebras"};
  app.require_subcommand(1);

  std::string word, format = "text", out_path;
  int max_n = 10, workers = 0, max_len = 14;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", out_path, "write output to a file");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list canonical maximal subalgebras");
  enumerate->add_option("--word", word, "orientation word over +/-")->required();
  add_common(enumerate);

  CLI::App* present = app.add_subcommand("present", "bound quiver presentations");
  present->add_option("--word", word, "orientation word over +/-")->required();
  std::string rep_filter;
  present->add_option("--rep", rep_filter, "only this representative tag");
  add_common(present);

  CLI::App* orbits_cmd = app.add_subcommand("orbits", "Aut(Q)-orbit partition");
  orbits_cmd->add_option("--word", word, "orientation word over +/-")->required();
  add_common(orbits_cmd);

  CLI::App* isoclasses = app.add_subcommand("isoclasses", "isomorphism partition");
  isoclasses->add_option("--word", word, "orientation word over +/-")->required();
  add_common(isoclasses);

  CLI::App* verify = app.add_subcommand("verify", "orbit vs isoclass sweep");
  verify->add_option("--max-n", max_n, "largest vertex count")->required();
  verify->add_option("--workers", workers, "worker threads (0 = all cores)");
  add_common(verify);

  CLI::App* words_cmd = app.add_subcommand("words", "word equation audit");
  words_cmd->add_option("--max-len", max_len, "largest total length")->required();
  add_common(words_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output out{out_path};
  try {
    if (enumerate->parsed()) return cmd_enumerate(word, format, out, true);
    if (present->parsed()) {
      // present is enumerate restricted to presentations (optionally one tag)
      msa::BinaryWord w = msa::BinaryWord::parse(word);
      msa::Quiver Q = msa::word_to_quiver(w);
      msa::PathAlgebra B(Q);
      auto reps = msa::enumerate_representatives(B);
      nlohmann::json j;
      std::ostringstream os;
      j["word"] = w.str();
      j["presentations"] = nlohmann::json::array();
      bool found = rep_filter.empty();
      for (const auto& r : reps) {
        if (!rep_filter.empty() && r.tag.str() != rep_filter) continue;
        found = true;
        msa::Presentation P = msa::present_representative(B, r.tag);
        msa::check_presentation(P, r.algebra);
        if (format == "json") {
          nlohmann::json pj = msa::presentation_to_json(P);
          pj["tag"] = r.tag.str();
          j["presentations"].push_back(pj);
        } else {
          os << r.tag.str() << ": " << quiver_str(P.gamma) << "\n";
          if (P.relations.empty()) {
            os << "  relations: none\n";
          } else {
            os << "  relations:";
            for (const auto& rel : P.relations) os << " (" << relation_str(P, rel) << ")";
            os << "\n";
          }
        }
      }
      if (!found) {
        std::cerr << "no representative tagged " << rep_filter << "\n";
        return 2;
      }
      out.write(format == "json" ? j.dump(2) : os.str());
      return 0;
    }
    if (orbits_cmd->parsed()) return cmd_orbits(word, format, out);
    if (isoclasses->parsed()) return cmd_isoclasses(word, format, out);
    if (verify->parsed()) {
      if (max_n < 2 || max_n > 14) {
        std::cerr << "--max-n must be between 2 and 14\n";
        return 2;
      }
      return cmd_verify(max_n, workers, format, out);
    }
    if (words_cmd->parsed()) {
      if (max_len < 0) {
        std::cerr << "--max-len must be >= 0\n";
        return 2;
      }
      return cmd_words(max_len, format, out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
