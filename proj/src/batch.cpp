#include "selmer/batch.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <thread>

#include "selmer/errors.hpp"
#include "selmer/io.hpp"

namespace selmer {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_positive(const std::string& text) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end || v == 0) {
    throw InvalidArgument("not a positive 64-bit integer");
  }
  return v;
}

}  // namespace

BatchResult certify_batch(const std::vector<std::string>& inputs, unsigned workers) {
  BatchResult result;
  result.lines.resize(inputs.size());
  std::vector<char> failed(inputs.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      const std::string text = trim(inputs[i]);
      try {
        result.lines[i] = to_json(certify(parse_positive(text))).dump();
      } catch (const Error& e) {
        Json err;
        err["input"] = text;
        err["error"] = e.what();
        result.lines[i] = err.dump();
        failed[i] = 1;
      }
    }
  };
  workers = std::max(1U, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  result.errors = static_cast<std::size_t>(std::count(failed.begin(), failed.end(), 1));
  return result;
}

}  // namespace selmer
