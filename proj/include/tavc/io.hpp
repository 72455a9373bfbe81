#ifndef TAVC_IO_HPP
#define TAVC_IO_HPP

#include <string>
#include <vector>

#include "tavc/ctmc.hpp"
#include "tavc/diffusion.hpp"
#include "tavc/pdmp.hpp"
#include "tavc/splitting.hpp"

namespace tavc::io {

// Model document: {"n": 2, "Q": [[-1,1],[2,-2]], "labels": ["a","b"]};
// Q may be nested rows or a flat row-major array of length n*n.
CtmcModel parse_ctmc_model(const std::string& json_text);
CtmcModel load_ctmc_model(const std::string& path);
std::string ctmc_model_to_json(const CtmcModel& model);

// Deterministic double formatting (shortest round-trip form).
std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);

// CSV artifacts with stable layouts.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

void write_ergodicity_profile_csv(const std::string& path, const ErgodicityProfile& profile);
void write_regeneration_log_csv(const std::string& path, const RegenerationLog& log);
void write_pdmp_path_csv(const std::string& path, const PdmpPath& p);
void write_grid_path_csv(const std::string& path, const GridPath& p);

} // namespace tavc::io

#endif
