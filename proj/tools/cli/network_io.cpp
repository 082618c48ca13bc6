#include "cli/network_io.hpp"

#include <fstream>
#include <sstream>

namespace cdc::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_index(const std::string& tok, int n, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw InputError(line, "bad variable index '" + tok + "'");
  }
  if (used != tok.size()) throw InputError(line, "bad variable index '" + tok + "'");
  if (v < 1 || v > n)
    throw InputError(line, "variable index " + tok + " out of range 1.." + std::to_string(n));
  return v - 1;
}

}  // namespace

NetworkFile parse_network(std::string_view text, std::optional<Model> model_override) {
  NetworkFile out;
  bool have_header = false;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream ls{std::string(line)};
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);

    if (!have_header) {
      if (tok.size() != 2) throw InputError(line_no, "expected header '<model> <n>'");
      auto m = model_from_name(tok[0]);
      if (!m) throw InputError(line_no, "unknown model '" + tok[0] + "'");
      try {
        std::size_t used = 0;
        out.n = std::stoi(tok[1], &used);
        if (used != tok[1].size() || out.n < 1) throw std::invalid_argument("n");
      } catch (const std::exception&) {
        throw InputError(line_no, "bad variable count '" + tok[1] + "'");
      }
      out.model = model_override.value_or(*m);
      have_header = true;
      continue;
    }

    if (tok.size() != 3) throw InputError(line_no, "expected 'i j MATRIX'");
    const int i = parse_index(tok[0], out.n, line_no);
    const int j = parse_index(tok[1], out.n, line_no);
    if (i == j) throw InputError(line_no, "diagonal constraint not allowed");
    if (out.pairs.count({i, j}))
      throw InputError(line_no, "duplicate pair (" + tok[0] + "," + tok[1] + ")");

    std::vector<DirectionMatrix> cands;
    std::string_view rest = tok[2];
    for (;;) {
      const auto bar = rest.find('|');
      const std::string_view piece = rest.substr(0, bar);
      DirectionMatrix m;
      try {
        m = DirectionMatrix::parse(piece);
      } catch (const std::invalid_argument& e) {
        throw InputError(line_no, e.what());
      }
      if (!is_valid_matrix(m, out.model))
        throw InputError(line_no, (m.is_zero() ? "zero matrix invalid: " : "matrix not valid for " +
                                                   std::string(model_name(out.model)) + ": ") +
                                      std::string(piece));
      cands.push_back(m);
      if (bar == std::string_view::npos) break;
      rest = rest.substr(bar + 1);
    }
    out.pairs.emplace(std::make_pair(i, j), std::move(cands));
  }
  if (!have_header) throw InputError(0, "empty network file");
  return out;
}

NetworkFile read_network_file(const std::string& path, std::optional<Model> model_override) {
  std::ifstream in(path);
  if (!in) throw InputError(0, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_network(ss.str(), model_override);
}

CdcBasicNetwork to_basic(const NetworkFile& file) {
  CdcBasicNetwork net(file.n);
  for (int i = 0; i < file.n; ++i) {
    for (int j = 0; j < file.n; ++j) {
      if (i == j) continue;
      auto it = file.pairs.find({i, j});
      const std::string name = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (it == file.pairs.end()) throw InputError(0, "missing pair " + name);
      if (it->second.size() != 1)
        throw InputError(0, "pair " + name + " has several candidates; use 'solve'");
      net.set(i, j, it->second.front());
    }
  }
  return net;
}

CdcDisjunctiveNetwork to_disjunctive(const NetworkFile& file) {
  CdcDisjunctiveNetwork net(file.n);
  const auto all = enumerate_basic(file.model);
  for (int i = 0; i < file.n; ++i) {
    for (int j = 0; j < file.n; ++j) {
      if (i == j) continue;
      auto it = file.pairs.find({i, j});
      net.set(i, j, it == file.pairs.end() ? all : it->second);
    }
  }
  return net;
}

std::string format_network(const CdcBasicNetwork& net, Model model) {
  std::ostringstream os;
  os << model_name(model) << ' ' << net.size() << '\n';
  for (int i = 0; i < net.size(); ++i)
    for (int j = 0; j < net.size(); ++j)
      if (i != j) os << i + 1 << ' ' << j + 1 << ' ' << net.get(i, j).to_string() << '\n';
  return os.str();
}

std::string format_network(const CdcDisjunctiveNetwork& net, Model model) {
  std::ostringstream os;
  os << model_name(model) << ' ' << net.size() << '\n';
  for (int i = 0; i < net.size(); ++i) {
    for (int j = 0; j < net.size(); ++j) {
      if (i == j) continue;
      os << i + 1 << ' ' << j + 1 << ' ';
      const auto& c = net.get(i, j);
      for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "|" : "") << c[k].to_string();
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace cdc::cli
