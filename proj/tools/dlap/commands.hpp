#pragma once

#include "input.hpp"
#include "output.hpp"

#include <cstdint>
#include <string>

namespace dlap::cli {

struct CommonFlags {
  Format format = Format::Human;
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

struct SpectrumFlags {
  InputFlags input;
  double jacobi_tol = 1e-12;
};

struct CheegerFlags {
  InputFlags input;
  std::size_t cap = 24;
};

struct CayleyFlags {
  std::string group;
  std::string set;
  std::string dvector;
  bool random = false;
};

struct CertifyFlags {
  std::size_t trials = 1000;
  std::size_t max_n = 12;
  std::size_t max_order = 15;
  std::size_t phis = 100;
};

struct ScanFlags {
  std::string family;
  std::string n;
  std::string k;
  std::size_t len = 0;
  std::size_t a = 0, b = 0, extra = 0;
  double p = 0.5;
  std::string group;
  std::size_t set_size = 2;
  std::size_t count = 1;
  std::string out;
  std::string summary;
  unsigned threads = 0;
  bool classical = false;
  bool skip_cheeger = false;
  std::size_t cap = 24;
};

struct VerifyFlags {
  InputFlags input;
  bool skip_cheeger = false;
  std::size_t cap = 24;
  std::size_t trials = 20;
};

// Each returns the process exit code.
int cmd_spectrum(const SpectrumFlags& f, const CommonFlags& c);
int cmd_cheeger(const CheegerFlags& f, const CommonFlags& c);
int cmd_cayley(const CayleyFlags& f, const CommonFlags& c);
int cmd_certify(const CertifyFlags& f, const CommonFlags& c);
int cmd_scan(const ScanFlags& f, const CommonFlags& c);
int cmd_verify_all(const VerifyFlags& f, const CommonFlags& c);

}  // namespace dlap::cli
