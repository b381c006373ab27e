// Command-line front end. Talks to the library exclusively through the C API
// in sosquartic.h.

#include "sosquartic.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using nlohmann::ordered_json;

namespace {

// Exit codes. Classification results use 0..2; everything at or above 64
// follows sysexits.h.
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;
constexpr int kExitInternal = 70;

struct Failure {
  int exit_code;
  std::string message;
};

[[noreturn]] void raise(sq_status status) {
  const int code = (status == SQ_ERR_INTERNAL) ? kExitInternal : kExitUsage;
  throw Failure{code, std::string(sq_status_name(status)) + ": " + sq_last_error_message()};
}

void check(sq_status status) {
  if (status != SQ_OK) raise(status);
}

std::string take(char* s) {
  std::string out(s);
  sq_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};

using Membership = std::unique_ptr<sq_membership, HandleDeleter<sq_membership, sq_membership_free>>;
using Cert = std::unique_ptr<sq_certificate, HandleDeleter<sq_certificate, sq_certificate_free>>;
using Report =
    std::unique_ptr<sq_sample_report, HandleDeleter<sq_sample_report, sq_sample_report_free>>;

std::string quantity(int n, sq_quantity q) {
  char* s = nullptr;
  check(sq_extremal_quantity(n, q, &s));
  return take(s);
}

std::string canonical(const std::string& q) {
  char* s = nullptr;
  check(sq_rational_canonical(q.c_str(), &s));
  return take(s);
}

void emit(const ordered_json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "command") continue;
    std::cout << key << ": ";
    if (value.is_string())
      std::cout << value.get<std::string>();
    else if (value.is_null())
      std::cout << "none";
    else
      std::cout << value.dump();
    std::cout << '\n';
  }
}

// ---- classify ------------------------------------------------------------

struct FormArgs {
  int n = 0;
  std::string a;
  std::string b;
};

int run_classify(const FormArgs& args, const std::string& format) {
  sq_membership* raw = nullptr;
  check(sq_classify(args.n, args.a.c_str(), args.b.c_str(), &raw));
  Membership m(raw);

  ordered_json j;
  j["command"] = "classify";
  j["n"] = args.n;
  j["a"] = canonical(args.a);
  j["b"] = canonical(args.b);
  j["alpha"] = quantity(args.n, SQ_ALPHA);
  j["beta"] = quantity(args.n, SQ_BETA);
  const sq_position psd = sq_membership_psd(m.get());
  const sq_position sos = sq_membership_sos(m.get());
  j["psd"] = sq_position_name(psd);
  j["sos"] = sq_position_name(sos);
  if (const std::size_t size = sq_membership_witness_size(m.get()); size > 0) {
    const std::int64_t* w = sq_membership_witness(m.get());
    j["witness"] = std::vector<std::int64_t>(w, w + size);
  } else {
    j["witness"] = nullptr;
  }
  if (sq_membership_has_sos_coords(m.get())) {
    char* s1 = nullptr;
    char* s2 = nullptr;
    check(sq_membership_sos_coords(m.get(), 0, &s1, &s2));
    j["sos_coords"] = {take(s1), take(s2)};
  } else {
    j["sos_coords"] = nullptr;
  }
  emit(j, format);

  if (sos != SQ_OUTSIDE) return 0;
  if (psd != SQ_OUTSIDE) return 1;
  return 2;
}

// ---- survey ----------------------------------------------------------------

int run_survey(int n_from, int n_to, const std::string& format) {
  if (n_from < 3 || n_to < n_from)
    throw Failure{kExitUsage, "survey needs 3 <= --n-from <= --n-to"};

  ordered_json rows = ordered_json::array();
  bool all_match = true;
  for (int n = n_from; n <= n_to; ++n) {
    int equal = 0;
    check(sq_cones_equal(n, &equal));
    int present = 0;
    char* ga = nullptr;
    char* gb = nullptr;
    check(sq_gap_witness(n, &present, &ga, &gb));

    ordered_json row;
    row["n"] = n;
    row["alpha"] = quantity(n, SQ_ALPHA);
    row["beta"] = quantity(n, SQ_BETA);
    row["cones_equal"] = equal != 0;
    row["n_odd"] = n % 2 != 0;
    if (present)
      row["gap_witness"] = {{"a", take(ga)}, {"b", take(gb)}};
    else
      row["gap_witness"] = nullptr;
    all_match = all_match && ((equal != 0) == (n % 2 != 0));
    rows.push_back(std::move(row));
  }

  if (format == "json") {
    ordered_json j;
    j["command"] = "survey";
    j["n_from"] = n_from;
    j["n_to"] = n_to;
    j["rows"] = std::move(rows);
    j["all_match"] = all_match;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "n\talpha\tbeta\tcones_equal\tgap_witness\n";
    for (const auto& row : rows) {
      std::cout << row["n"].get<int>() << '\t' << row["alpha"].get<std::string>() << '\t'
                << row["beta"].get<std::string>() << '\t'
                << (row["cones_equal"].get<bool>() ? "yes" : "no") << '\t';
      if (row["gap_witness"].is_null())
        std::cout << "-";
      else
        std::cout << "(" << row["gap_witness"]["a"].get<std::string>() << ", "
                  << row["gap_witness"]["b"].get<std::string>() << ")";
      std::cout << '\n';
    }
    std::cout << (all_match ? "cones equal exactly for odd n: confirmed\n"
                            : "MISMATCH: cones_equal(n) differs from (n odd)\n");
  }
  return all_match ? 0 : 1;
}

// ---- extremal ---------------------------------------------------------------

int run_extremal(int n, const std::string& format) {
  ordered_json j;
  j["command"] = "extremal";
  j["n"] = n;
  j["alpha"] = quantity(n, SQ_ALPHA);
  j["beta"] = quantity(n, SQ_BETA);
  j["F"] = {quantity(n, SQ_F_A), quantity(n, SQ_F_B)};
  j["G"] = {quantity(n, SQ_G_A), quantity(n, SQ_G_B)};
  j["S1"] = {quantity(n, SQ_S1_A), quantity(n, SQ_S1_B)};
  j["S2"] = {quantity(n, SQ_S2_A), quantity(n, SQ_S2_B)};
  emit(j, format);
  return 0;
}

// ---- certify / verify -----------------------------------------------------

int run_certify(const FormArgs& args, bool global, const std::string& out_path) {
  sq_certificate* raw = nullptr;
  const sq_status status = global ? sq_certify_global(args.n, args.a.c_str(), args.b.c_str(), &raw)
                                  : sq_certify(args.n, args.a.c_str(), args.b.c_str(), &raw);
  if (status == SQ_ERR_NOT_IN_SOS_CONE || status == SQ_ERR_NOT_GLOBALLY_PSD) {
    ordered_json j;
    j["command"] = "certify";
    j["status"] = sq_status_name(status);
    j["reason"] = sq_last_error_message();
    if (status == SQ_ERR_NOT_IN_SOS_CONE) {
      sq_membership* m = nullptr;
      check(sq_classify(args.n, args.a.c_str(), args.b.c_str(), &m));
      Membership owned(m);
      char* s1 = nullptr;
      char* s2 = nullptr;
      check(sq_membership_sos_coords(owned.get(), 1, &s1, &s2));
      j["a_prime"] = take(s1);
      j["b_prime"] = take(s2);
    }
    std::cout << j.dump(2) << '\n';
    return 1;
  }
  check(status);
  Cert cert(raw);

  char* text = nullptr;
  check(sq_certificate_serialize(cert.get(), &text));
  const std::string body = take(text);
  if (out_path.empty() || out_path == "-") {
    std::cout << body;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << body;
  out.close();
  if (!out) throw Failure{kExitIo, "cannot write " + out_path};

  ordered_json j;
  j["command"] = "certify";
  j["status"] = "Ok";
  j["path"] = out_path;
  j["n"] = sq_certificate_n(cert.get());
  j["modulo_p1"] = sq_certificate_modulo_p1(cert.get()) != 0;
  j["squares"] = sq_certificate_square_count(cert.get());
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_verify(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitIo, "cannot read " + path};
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Failure{kExitIo, "error reading " + path};

  ordered_json j;
  j["command"] = "verify";
  j["path"] = path;
  sq_certificate* raw = nullptr;
  const sq_status status = sq_certificate_parse(text.data(), text.size(), &raw);
  if (status != SQ_OK) {
    j["valid"] = false;
    j["reason"] = std::string(sq_status_name(status)) + ": " + sq_last_error_message();
    std::cout << j.dump(2) << '\n';
    return 1;
  }
  Cert cert(raw);
  const bool ok = sq_certificate_verify(cert.get()) != 0;
  j["valid"] = ok;
  j["reason"] = ok ? "identity verified exactly" : "certificate identity does not hold";
  std::cout << j.dump(2) << '\n';
  return ok ? 0 : 1;
}

// ---- oracle -----------------------------------------------------------------

int run_oracle(const FormArgs& args, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  sq_sample_report* raw = nullptr;
  check(sq_sample_min(args.n, args.a.c_str(), args.b.c_str(), samples, seed, threads, &raw));
  Report report(raw);
  ordered_json j;
  j["command"] = "oracle";
  j["n"] = args.n;
  j["a"] = canonical(args.a);
  j["b"] = canonical(args.b);
  j["samples"] = sq_sample_report_samples(report.get());
  j["seed"] = sq_sample_report_seed(report.get());
  j["min_value"] = sq_sample_report_min(report.get());
  const double* p = sq_sample_report_point(report.get());
  j["argmin_point"] = std::vector<double>(p, p + sq_sample_report_dim(report.get()));
  std::cout << j.dump(2) << '\n';
  return 0;
}

void add_form_options(CLI::App* cmd, FormArgs& args) {
  cmd->add_option("-n", args.n, "Hyperplane dimension n (forms in n+1 variables)")->required();
  cmd->add_option("-a", args.a, "Coefficient of p2^2 (p or p/q)")->required();
  cmd->add_option("-b", args.b, "Coefficient of p4 (p or p/q)")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of invariant quartics a*p2^2 + b*p4 on the zero-sum hyperplane"};
  app.require_subcommand(1);
  std::string format = "json";

  FormArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Classify a form against both cones");
  add_form_options(classify, classify_args);
  classify->add_option("--format", format, "Output format")->capture_default_str()->check(CLI::IsMember({"json", "text"}));

  int n_from = 3;
  int n_to = 10;
  auto* survey = app.add_subcommand("survey", "Compare the cones over a range of n");
  survey->add_option("--n-from", n_from, "First n (>= 3)")->required();
  survey->add_option("--n-to", n_to, "Last n")->required();
  survey->add_option("--format", format, "Output format")->capture_default_str()->check(CLI::IsMember({"json", "text"}));

  int extremal_n = 0;
  auto* extremal = app.add_subcommand("extremal", "Print alpha, beta and the extremal rays");
  extremal->add_option("-n", extremal_n, "Hyperplane dimension n")->required();
  extremal->add_option("--format", format, "Output format")->capture_default_str()->check(CLI::IsMember({"json", "text"}));

  FormArgs certify_args;
  std::string out_path;
  bool global = false;
  auto* certify = app.add_subcommand("certify", "Emit an SOS certificate");
  add_form_options(certify, certify_args);
  certify->add_option("-o,--out", out_path, "Output file (default: stdout)");
  certify->add_flag("--global", global, "Certificate in R[x] for a globally nonnegative form");

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Verify a certificate file");
  verify->add_option("cert-path", cert_path, "Certificate file")->required();

  FormArgs oracle_args;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 7;
  unsigned threads = 0;
  auto* oracle = app.add_subcommand("oracle", "Sample the form on the unit sphere of the hyperplane");
  add_form_options(oracle, oracle_args);
  oracle->add_option("--samples", samples, "Number of sample points")->capture_default_str();
  oracle->add_option("--seed", seed, "Base seed of the 16 sample streams")->capture_default_str();
  oracle->add_option("--threads", threads, "Worker threads (0 = all cores); result is unaffected");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*classify) return run_classify(classify_args, format);
    if (*survey) return run_survey(n_from, n_to, format);
    if (*extremal) return run_extremal(extremal_n, format);
    if (*certify) return run_certify(certify_args, global, out_path);
    if (*verify) return run_verify(cert_path);
    if (*oracle) return run_oracle(oracle_args, samples, seed, threads);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  }
  return kExitUsage;
}
