#include <doctest.h>

#include <fstream>
#include <sstream>

#include "aoposet/enumeration.hpp"

TEST_CASE("committed goldens diff clean") {
  const std::vector<std::size_t> rows{1, 2, 5, 16, 63, 318, 2045};
  for (std::size_t n = 1; n <= 7; ++n) {
    CAPTURE(n);
    std::ifstream in(std::string(AOPOSET_GOLDEN_DIR) + "/posets_n" + std::to_string(n) + ".csv");
    REQUIRE(in);
    std::stringstream committed;
    committed << in.rdbuf();
    const auto text = committed.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(rows[n - 1] + 2));
    CHECK(text == aoposet::enumeration::golden_csv(n));
  }
}
