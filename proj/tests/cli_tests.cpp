// End-to-end tests for the iecoctl binary.  argv[1] is the path to the tool;
// every scenario shells out to it and checks exit codes and emitted files.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& label) {
  if (ok) {
    std::cout << "ok: " << label << "\n";
  } else {
    std::cout << "FAILED: " << label << "\n";
    ++g_failures;
  }
}

int run(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -2;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_csv(const fs::path& p, const std::vector<std::vector<double>>& rows) {
  std::ofstream out(p);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
}

std::vector<std::vector<double>> captures(std::mt19937_64& gen,
                                          const std::vector<double>& proto,
                                          std::size_t count, double noise) {
  std::normal_distribution<double> jitter(0.0, noise);
  std::vector<std::vector<double>> rows;
  for (std::size_t r = 0; r < count; ++r) {
    std::vector<double> row;
    row.reserve(proto.size());
    for (double p : proto) row.push_back(p + jitter(gen));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-iecoctl>\n";
    return 1;
  }
  const std::string bin = std::string("\"") + argv[1] + "\"";
  const fs::path dir = fs::temp_directory_path() / "iecoctl_cli_tests";
  fs::remove_all(dir);
  fs::create_directories(dir);

  constexpr std::size_t kDim = 600;
  std::mt19937_64 gen(2024);
  std::normal_distribution<double> unit(0.0, 1.0);
  std::vector<double> proto_a(kDim);
  std::vector<double> proto_b(kDim);
  for (auto& v : proto_a) v = unit(gen);
  for (auto& v : proto_b) v = unit(gen);

  const fs::path enroll_csv = dir / "enroll.csv";
  const fs::path query_csv = dir / "query.csv";
  const fs::path impostor_csv = dir / "impostor.csv";
  write_csv(enroll_csv, captures(gen, proto_a, 5, 0.05));
  write_csv(query_csv, captures(gen, proto_a, 5, 0.05));
  write_csv(impostor_csv, captures(gen, proto_b, 5, 0.05));

  const fs::path helper = dir / "helper.bin";
  const fs::path key1 = dir / "key1.txt";
  const std::string params = " --n 255 --k 139 --phi 2 --gamma 128";
  const std::string quiet = " 2>/dev/null";

  // Seeded enrollment emits the helper and the key through separate outputs.
  check(run(bin + " enroll --templates " + q(enroll_csv) + " --helper " +
            q(helper) + " --key-out " + q(key1) + params + " --seed 42" +
            quiet) == 0,
        "enroll exits 0");
  check(fs::exists(helper), "helper file written");
  const std::string key_text = slurp(key1);
  check(key_text.size() == 36 + 1, "key is 36 hex chars plus newline");
  check(key_text.find_first_not_of("0123456789abcdef\n") == std::string::npos,
        "key is lowercase hex");
  check(slurp(helper).find(key_text.substr(0, 36)) == std::string::npos,
        "key hex does not appear inside the helper file");

  // Same seed, same inputs: byte-identical helper and key.
  const fs::path helper2 = dir / "helper2.bin";
  const fs::path key2 = dir / "key2.txt";
  run(bin + " enroll --templates " + q(enroll_csv) + " --helper " + q(helper2) +
      " --key-out " + q(key2) + params + " --seed 42" + quiet);
  check(slurp(helper) == slurp(helper2), "seeded enroll reproduces helper");
  check(slurp(key1) == slurp(key2), "seeded enroll reproduces key");

  // Without a seed the command draws system entropy: outputs differ.
  const fs::path helper3 = dir / "helper3.bin";
  const fs::path key3 = dir / "key3.txt";
  run(bin + " enroll --templates " + q(enroll_csv) + " --helper " + q(helper3) +
      " --key-out " + q(key3) + params + quiet);
  check(slurp(helper) != slurp(helper3), "unseeded enroll differs (helper)");
  check(slurp(key1) != slurp(key3), "unseeded enroll differs (key)");

  // Genuine reproduction recovers the identical key on stdout.
  const fs::path key_out = dir / "reproduced.txt";
  check(run(bin + " reproduce --templates " + q(query_csv) + " --helper " +
            q(helper) + " > " + q(key_out) + quiet) == 0,
        "genuine reproduce exits 0");
  check(slurp(key_out) == key_text, "reproduced key equals enrolled key");

  // A different person's templates are rejected with exit code 1.
  check(run(bin + " reproduce --templates " + q(impostor_csv) + " --helper " +
            q(helper) + quiet + " >/dev/null") == 1,
        "impostor reproduce exits 1");

  // Corrupt helper files are reported as corruption (3), not as a reject.
  const fs::path truncated = dir / "truncated.bin";
  {
    const std::string bytes = slurp(helper);
    std::ofstream out(truncated, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size() / 2));
  }
  check(run(bin + " reproduce --templates " + q(query_csv) + " --helper " +
            q(truncated) + quiet + " >/dev/null") == 3,
        "truncated helper exits 3");

  const fs::path flipped = dir / "flipped.bin";
  {
    std::string bytes = slurp(helper);
    bytes[bytes.size() / 3] ^= 0x20;
    std::ofstream out(flipped, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
  check(run(bin + " reproduce --templates " + q(query_csv) + " --helper " +
            q(flipped) + quiet + " >/dev/null") == 3,
        "bit-flipped helper exits 3");

  // Input problems exit 2: missing files, malformed CSV, unknown flags.
  check(run(bin + " reproduce --templates " + q(dir / "absent.csv") +
            " --helper " + q(helper) + quiet + " >/dev/null") == 2,
        "missing templates exits 2");
  check(run(bin + " reproduce --templates " + q(query_csv) + " --helper " +
            q(dir / "absent.bin") + quiet + " >/dev/null") == 2,
        "missing helper exits 2");
  const fs::path bad_csv = dir / "bad.csv";
  {
    std::ofstream out(bad_csv);
    out << "1.0,2.0,fish\n";
  }
  check(run(bin + " enroll --templates " + q(bad_csv) + " --helper " +
            q(dir / "x.bin") + quiet + " >/dev/null") == 2,
        "non-numeric CSV exits 2");
  const fs::path one_row = dir / "one_row.csv";
  write_csv(one_row, captures(gen, proto_a, 1, 0.05));
  check(run(bin + " enroll --templates " + q(one_row) + " --helper " +
            q(dir / "y.bin") + params + quiet + " >/dev/null") == 2,
        "single-template enroll exits 2");
  const fs::path narrow = dir / "narrow.csv";
  write_csv(narrow, captures(
                        gen,
                        std::vector<double>(proto_a.begin(), proto_a.begin() + 300),
                        3, 0.05));
  check(run(bin + " reproduce --templates " + q(narrow) + " --helper " +
            q(helper) + quiet + " >/dev/null") == 2,
        "dimension mismatch exits 2");
  check(run(bin + " reproduce --bogus-flag" + quiet + " >/dev/null") == 2,
        "unknown flag exits 2");
  check(run(bin + " enroll --templates " + q(enroll_csv) + " --helper " +
            q(dir / "z.bin") + " --n 255 --k 116" + quiet + " >/dev/null") == 2,
        "unconstructible code exits 2");

  // simulate: writes JSON + TSV, fixed seed gives byte-identical reports.
  const fs::path sim1 = dir / "sim1";
  const fs::path sim2 = dir / "sim2";
  const std::string sim_flags =
      " simulate --users 5 --sets 3 --feature-dim 700 --k 131 --k 147"
      " --seed 7 --out ";
  check(run(bin + sim_flags + q(sim1) + quiet) == 0, "simulate exits 0");
  check(fs::exists(sim1.string() + ".json") && fs::exists(sim1.string() + ".tsv"),
        "simulate writes JSON and TSV");
  run(bin + sim_flags + q(sim2) + quiet);
  check(slurp(sim1.string() + ".json") == slurp(sim2.string() + ".json") &&
            slurp(sim1.string() + ".tsv") == slurp(sim2.string() + ".tsv"),
        "seeded simulate reports are byte-identical");
  const std::string sim_tsv = slurp(sim1.string() + ".tsv");
  check(sim_tsv.find("131") != std::string::npos &&
            sim_tsv.find("147") != std::string::npos,
        "simulate TSV covers every requested code");

  // analyze: each mode runs and emits its report pair.
  const fs::path fm = dir / "formulas";
  check(run(bin + " analyze --mode formulas --trials 3000 --n 15 --k 5"
                  " --gamma 32 --seed 3 --out " +
            q(fm) + quiet) == 0,
        "analyze formulas exits 0");
  check(slurp(fm.string() + ".tsv").find("first_order") != std::string::npos,
        "formulas TSV has prediction columns");
  const fs::path ul = dir / "unlink";
  check(run(bin + " analyze --mode unlinkability --users 4 --seeds 8"
                  " --trials 3000 --feature-dim 256 --n 100 --phi 2 --seed 2"
                  " --out " +
            q(ul) + quiet) == 0,
        "analyze unlinkability exits 0");
  check(slurp(ul.string() + ".json").find("d_sys") != std::string::npos,
        "unlinkability JSON reports d_sys");
  const fs::path hg = dir / "hist";
  check(run(bin + " analyze --mode histograms --users 5 --sets 3"
                  " --feature-dim 700 --n 255 --k 139 --phi 2 --seed 4 --out " +
            q(hg) + quiet) == 0,
        "analyze histograms exits 0");
  const fs::path at = dir / "attack";
  check(run(bin + " analyze --mode attack --n 15 --k 5 --phi 2 --gamma 32"
                  " --seed 5 --out " +
            q(at) + quiet) == 0,
        "analyze attack exits 0");
  check(slurp(at.string() + ".tsv").find("key_hits") != std::string::npos,
        "attack TSV reports key hits");
  check(run(bin + " analyze --mode nonsense" + quiet + " >/dev/null") == 2,
        "unknown analyze mode exits 2");

  // Secrecy: no emitted report may contain the enrolled key.
  const std::string key_hex = key_text.substr(0, 36);
  bool leak = false;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name.rfind("key", 0) == 0 || name == "reproduced.txt") continue;
    if (slurp(entry.path()).find(key_hex) != std::string::npos) leak = true;
  }
  check(!leak, "key hex appears in no other artifact");

  std::cout << (g_failures == 0 ? "all CLI tests passed\n"
                                : "CLI test failures\n");
  fs::remove_all(dir);
  return g_failures == 0 ? 0 : 1;
}
