#ifndef HAHNOSC_CLI_HPP
#define HAHNOSC_CLI_HPP

namespace hahnosc {

// Entry point behind the hahnosc binary. Commands: verify, spectrum,
// wavefunction, figure1, figure2, limit-scan. Returns the process exit code:
// 0 success, 1 verification or runtime failure, 2 usage error.
int run_cli(int argc, const char* const* argv);

} // namespace hahnosc

#endif
