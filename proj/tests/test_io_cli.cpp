#include "oracle.hpp"

#include <zinbiel/cli.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace zinbiel;

namespace {

std::string data(const std::string& file) { return std::string(ZINBIEL_DATA_DIR) + "/" + file; }

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream os, es;
  int code = cli::run_command(std::move(args), os, es);
  return {code, os.str(), es.str()};
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST(Parse, MinimalAlgebraIsZero) {
  auto a = parse_algebra("algebra Z dim 1 field Q flavor zinbiel\n");
  EXPECT_TRUE(a.is_trivial());
  EXPECT_EQ(a.dim(), 1);
}

TEST(Parse, N2File) {
  auto a = parse_algebra(cli::detail::read_file(data("n2.zb")));
  EXPECT_TRUE(oracle::same(a, corpus::n2()));
  EXPECT_EQ(a.flavor(), Flavor::zinbiel);
  auto f7 = parse_algebra(cli::detail::read_file(data("n2_f7.zb")));
  EXPECT_EQ(f7.field(), corpus::f7());
}

TEST(Parse, RejectsBadInput) {
  EXPECT_THROW(parse_algebra("algebra X dim 1 field Q flavor zinbiel\nprod 1 1 -> 1/0*1\n"), std::exception);
  EXPECT_THROW(parse_algebra("algebra X dim 2 field Q flavor unchecked\nprod 1 1 -> 2\nprod 1 1 -> 1\n"), ParseError);
  EXPECT_THROW(parse_algebra("algebra X dim 2 field Q flavor unchecked\nprod 1 1 -> 2 + 3*2\n"), ParseError);
  EXPECT_THROW(parse_algebra("algebra E dim 1 field Q flavor zinbiel\nprod 1 1 -> 1\n"), ParseError);
  EXPECT_NO_THROW(parse_algebra("algebra E dim 1 field Q flavor zinbiel\nprod 1 1 -> 1\n", ParseOptions{false, std::nullopt}));
}

TEST(Parse, ErrorsCarryLineAndColumn) {
  try {
    parse_algebra("algebra X dim 2 field Q flavor unchecked\n\nprod 1 3 -> 1\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 8);
  }
}

TEST(Serialize, RoundtripsEveryDocumentKind) {
  auto a = corpus::n2();
  auto b = trivial_bialgebra(a);
  Workspace w;
  w.add(AlgebraDoc{a, Flavor::zinbiel});
  w.add(AlgebraDoc{b.dual().with_name("N2dual"), Flavor::zinbiel});
  w.add(TensorDoc{"r", a.field(), corpus::tensor(a.field(), {{0, 1}, {1, 0}})});
  w.add(FormDoc{"w", a.field(), BilinearForm(Matrix::from_rows({{Scalar(0), Scalar::rational(1, 2)}, {Scalar::rational(-1, 2), Scalar(0)}})), true, true});
  w.add(RepDoc{"coreg", "N2", coregular_representation(a)});
  w.add(MatchedPairDoc{"mp", "N2", "N2dual", bialgebra_to_matched_pair(b)});
  w.add(BialgebraDoc{"bi", "N2", "N2dual", Bialgebra(a, b.dual().with_name("N2dual"), "bi")});
  w.add(RBDoc{"P", "N2", RBOperator{a, -Matrix::identity(2), Scalar(1)}});
  auto text = serialize_workspace(w);
  auto back = parse_workspace(text);
  ASSERT_EQ(back.documents.size(), w.documents.size());
  EXPECT_EQ(serialize_workspace(back), text);
  EXPECT_TRUE(oracle::same(back.algebra("N2"), a));
  EXPECT_EQ(back.all<TensorDoc>().front()->tensor, w.all<TensorDoc>().front()->tensor);
  EXPECT_EQ(back.all<RBDoc>().front()->op.P, -Matrix::identity(2));
}

TEST(Serialize, CorpusAlgebrasRoundtrip) {
  for (const auto& a : corpus::algebras()) {
    auto back = parse_algebra(serialize_algebra(a));
    EXPECT_TRUE(oracle::same(back, a)) << a.name();
    EXPECT_EQ(back.field(), a.field());
  }
}

TEST(Parse, HeaderlessTensorAgainstAlgebra) {
  auto a = parse_algebra(cli::detail::read_file(data("n2_f7.zb")));
  auto r = parse_tensor(cli::detail::read_file(data("n2_f7_r.zb")), a);
  EXPECT_EQ(r.dim(), 2);
  EXPECT_TRUE(check_coboundary_bialgebra(a, r).report.passed());
}

TEST(Cli, CorpusCheckPasses) {
  auto r = run({"corpus-check"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, IdempotentFailsWithWitness) {
  auto r = run({"validate", "algebra", data("idempotent.zb")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness (e1, e1, e1) in E"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("replay:"), std::string::npos);
}

TEST(Cli, ValidPassesAndUsageErrors) {
  EXPECT_EQ(run({"validate", "all", data("n2_bialgebra.zb")}).code, 0);
  EXPECT_EQ(run({"validate", "nonsense", data("n2.zb")}).code, 2);
  EXPECT_EQ(run({"validate", "algebra", data("missing.zb")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--field", "R", "validate", "algebra", data("n2.zb")}).code, 2);
}

TEST(Cli, ClassifyTensors) {
  auto r = run({"classify-r", "--algebra", data("n2_f7.zb"), "--tensor", data("n2_f7_r.zb")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("triangular"), std::string::npos);
  auto mixed = run({"classify-r", data("n2_f7_tensors.zb")});
  EXPECT_EQ(mixed.code, 1);
  EXPECT_NE(mixed.out.find("bad: not a coboundary bialgebra"), std::string::npos) << mixed.out;
}

TEST(Cli, BuildDoubleThenClassifyFactorizable) {
  auto path = temp_path("zinbiel_double_test.zb");
  auto r = run({"--out", path, "build-double", data("n2_bialgebra.zb")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto c = run({"classify-r", path});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("factorizable"), std::string::npos) << c.out;
  auto rb = run({"rb-roundtrip", path, "--lambda", "-3"});
  EXPECT_EQ(rb.code, 0) << rb.err;
  std::filesystem::remove(path);
}

TEST(Cli, JsonReport) {
  auto r = run({"--json", "validate", "algebra", data("idempotent.zb")});
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "fail");
  EXPECT_EQ(j.at("reports").at(0).at("clauses").at(0).at("witness"), (std::vector<int>{1, 1, 1}));
}

TEST(Cli, SearchOverPrimeField) {
  auto r = run({"search-zybe", "--algebra", data("n2_f7.zb"), "--field", "Fp:7", "--symmetric", "--limit", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.out.empty());
}

TEST(Cli, ConnesRoundtrip) {
  auto path = temp_path("zinbiel_connes_test.zb");
  {
    std::ofstream f(path);
    f << "algebra Z dim 2 field Q flavor zinbiel\n\nform w dim 2 field Q skew nondegenerate\nw 1 2 = 1\nw 2 1 = -1\n";
  }
  auto r = run({"connes-roundtrip", path});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  std::filesystem::remove(path);
}

TEST(Witness, ReplayReproducesDefect) {
  // every reported witness is a basis triple with a nonzero Zinbiel defect
  auto g = oracle::rng(40);
  int failures = 0;
  for (auto f : {FieldSpec::rationals(), corpus::f7()})
    for (int t = 0; t < 100; ++t) {
      int n = 1 + t % 3;
      Algebra a("R", n, f, corpus::random_tensor(n, f, g).is_zero() ? ProductTable{} : ProductTable{{{0, 0}, corpus::random_vector(n, f, g)}});
      auto rep = check_zinbiel(a);
      if (const auto* c = rep.first_failure()) {
        ++failures;
        ASSERT_EQ(c->witness.size(), 3u);
        EXPECT_FALSE(is_zero(zinbiel_defect(a, a.basis(c->witness[0]), a.basis(c->witness[1]), a.basis(c->witness[2]))));
        EXPECT_FALSE(oracle::zinbiel(a));
      } else {
        EXPECT_TRUE(oracle::zinbiel(a));
      }
    }
  EXPECT_GT(failures, 0);
}
