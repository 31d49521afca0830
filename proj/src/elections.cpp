#include "skc/elections.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace skc {

namespace {

struct Line {
  std::string text;
  int number;  // 1-based position in the source
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++number;
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != '#')
      lines.push_back({line, number});
    start = end + 1;
    if (end == text.size()) break;
  }
  return lines;
}

std::vector<long> parse_ints(const std::string& line, int line_no,
                             const char* what) {
  std::vector<long> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
      throw ParseError(std::string(what) + " on line " +
                       std::to_string(line_no) + ": '" + tok +
                       "' is not an integer");
    out.push_back(v);
  }
  return out;
}

void check_permutation(const std::vector<long>& values, int m, int line_no) {
  if (static_cast<int>(values.size()) != m)
    throw ParseError("vote on line " + std::to_string(line_no) + " lists " +
                     std::to_string(values.size()) + " candidates, expected " +
                     std::to_string(m));
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (long v : values) {
    if (v < 0 || v >= m || seen[static_cast<std::size_t>(v)])
      throw ParseError("vote on line " + std::to_string(line_no) +
                       " is not a permutation of 0.." + std::to_string(m - 1));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

void validate(const Election& e) {
  if (e.m < 1) throw std::invalid_argument("election needs m >= 1 candidates");
  if (e.votes.empty()) throw std::invalid_argument("election needs n >= 1 votes");
  for (const Vote& v : e.votes) {
    if (static_cast<int>(v.size()) != e.m)
      throw std::invalid_argument("vote length differs from candidate count");
    std::vector<bool> seen(static_cast<std::size_t>(e.m), false);
    for (CandidateId c : v) {
      if (c < 0 || c >= e.m || seen[static_cast<std::size_t>(c)])
        throw std::invalid_argument("vote is not a permutation");
      seen[static_cast<std::size_t>(c)] = true;
    }
  }
}

Election parse_election(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError("malformed header: file has no content lines");

  const std::vector<long> header =
      parse_ints(lines[0].text, lines[0].number, "malformed header");
  if (header.size() != 2 || header[0] < 1 || header[1] < 1)
    throw ParseError("malformed header on line " +
                     std::to_string(lines[0].number) +
                     ": expected 'm n' with m >= 1 and n >= 1");
  const int m = static_cast<int>(header[0]);
  const long n = header[1];

  if (static_cast<long>(lines.size()) - 1 != n)
    throw ParseError("wrong vote count: header on line " +
                     std::to_string(lines[0].number) + " promises " +
                     std::to_string(n) + " votes, file has " +
                     std::to_string(lines.size() - 1));

  Election e;
  e.m = m;
  e.votes.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<long> values =
        parse_ints(lines[i].text, lines[i].number, "malformed vote");
    check_permutation(values, m, lines[i].number);
    Vote vote(values.begin(), values.end());
    e.votes.push_back(std::move(vote));
  }
  return e;
}

std::string serialize_election(const Election& e) {
  std::ostringstream out;
  out << e.m << ' ' << e.voters() << '\n';
  for (const Vote& v : e.votes) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << ' ';
      out << v[i];
    }
    out << '\n';
  }
  return out.str();
}

NamedElection parse_preflib(std::string_view text) {
  NamedElection out;
  int m = -1;
  std::vector<std::pair<int, std::string>> names;

  int number = 0;
  std::size_t start = 0;
  std::vector<Line> orders;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++number;
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos) {
      if (line[first] == '#') {
        const std::string meta = line.substr(first + 1);
        auto value_of = [&](const std::string& key) -> std::optional<std::string> {
          const auto pos = meta.find(key);
          if (pos == std::string::npos) return std::nullopt;
          const auto colon = meta.find(':', pos + key.size());
          if (colon == std::string::npos) return std::nullopt;
          std::string v = meta.substr(colon + 1);
          const auto b = v.find_first_not_of(" \t");
          if (b == std::string::npos) return std::string();
          const auto e2 = v.find_last_not_of(" \t");
          return v.substr(b, e2 - b + 1);
        };
        if (auto v = value_of("NUMBER ALTERNATIVES")) {
          m = std::stoi(*v);
        } else if (meta.find("ALTERNATIVE NAME") != std::string::npos) {
          const auto key_pos = meta.find("ALTERNATIVE NAME");
          const auto colon = meta.find(':', key_pos);
          if (colon != std::string::npos) {
            const std::string idx_str =
                meta.substr(key_pos + 16, colon - key_pos - 16);
            const int idx = std::stoi(idx_str);
            std::string nm = meta.substr(colon + 1);
            const auto b = nm.find_first_not_of(" \t");
            nm = b == std::string::npos ? std::string() : nm.substr(b);
            names.emplace_back(idx, nm);
          }
        }
      } else {
        orders.push_back({line, number});
      }
    }
    start = end + 1;
    if (end == text.size()) break;
  }

  if (m < 1)
    throw ParseError("malformed header: missing '# NUMBER ALTERNATIVES' line");
  if (orders.empty()) throw ParseError("file has no preference order lines");

  out.election.m = m;
  out.names.assign(static_cast<std::size_t>(m), "");
  for (const auto& [idx, nm] : names)
    if (idx >= 1 && idx <= m) out.names[static_cast<std::size_t>(idx - 1)] = nm;

  for (const Line& line : orders) {
    const auto colon = line.text.find(':');
    if (colon == std::string::npos)
      throw ParseError("order line " + std::to_string(line.number) +
                       " is missing the 'count:' prefix");
    long count = 0;
    try {
      count = std::stol(line.text.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError("order line " + std::to_string(line.number) +
                       " has a non-integer multiplicity");
    }
    if (count < 1)
      throw ParseError("order line " + std::to_string(line.number) +
                       " has multiplicity < 1");
    std::string ranking = line.text.substr(colon + 1);
    std::replace(ranking.begin(), ranking.end(), ',', ' ');
    const std::vector<long> ids = parse_ints(ranking, line.number, "malformed order");
    std::vector<long> zero_based;
    zero_based.reserve(ids.size());
    for (long id : ids) zero_based.push_back(id - 1);
    check_permutation(zero_based, m, line.number);
    Vote vote(zero_based.begin(), zero_based.end());
    for (long i = 0; i < count; ++i) out.election.votes.push_back(vote);
  }
  return out;
}

PairwiseTally pairwise_tally(const Election& e) {
  PairwiseTally t;
  t.m = e.m;
  t.wins.assign(static_cast<std::size_t>(e.m) * static_cast<std::size_t>(e.m), 0);
  for (const Vote& v : e.votes) {
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        ++t.wins[static_cast<std::size_t>(v[i]) * static_cast<std::size_t>(e.m) +
                 static_cast<std::size_t>(v[j])];
  }
  return t;
}

std::optional<CandidateId> condorcet_winner(const Election& e) {
  const PairwiseTally t = pairwise_tally(e);
  const int threshold = majority_threshold(e.voters());
  for (CandidateId i = 0; i < e.m; ++i) {
    bool beats_all = true;
    for (CandidateId j = 0; j < e.m && beats_all; ++j)
      if (j != i && t.at(i, j) < threshold) beats_all = false;
    if (beats_all) return i;  // unique when it exists
  }
  return std::nullopt;
}

DeficitVector deficits(const DodgsonTriple& t) {
  const PairwiseTally tally = pairwise_tally(t.election);
  const int threshold = majority_threshold(t.election.voters());
  DeficitVector d;
  d.c = t.c;
  d.deficit.assign(static_cast<std::size_t>(t.election.m), 0);
  for (CandidateId j = 0; j < t.election.m; ++j)
    if (j != t.c) d.deficit[static_cast<std::size_t>(j)] =
        std::max(0, threshold - tally.at(t.c, j));
  return d;
}

NicenessWitness is_nice(const DodgsonTriple& t) {
  const DeficitVector d = deficits(t);
  NicenessWitness w;
  w.witness.assign(static_cast<std::size_t>(t.election.m), 0);
  for (const Vote& v : t.election.votes) {
    for (std::size_t pos = 1; pos < v.size(); ++pos) {
      if (v[pos] == t.c) {
        ++w.witness[static_cast<std::size_t>(v[pos - 1])];
        break;
      }
    }
  }
  w.nice = true;
  for (CandidateId j = 0; j < t.election.m; ++j)
    if (j != t.c &&
        w.witness[static_cast<std::size_t>(j)] < d.deficit[static_cast<std::size_t>(j)])
      w.nice = false;
  return w;
}

}  // namespace skc
