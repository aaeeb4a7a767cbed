#include "spoilkit/data/manifest.hpp"

#include <gtest/gtest.h>

#include <string>

using namespace spoilkit;

namespace {

std::string vocab_block() {
  return "# vocab particle_size = Cat-1,Cat-2,Cat-2 or 3,Cat-3,Cat-4\n"
         "# vocab relative_density = Cat-1,Cat-2,Cat-3,Cat-4\n"
         "# vocab fabric_structure = Cat-1,Cat-2,Cat-3,Cat-4\n"
         "# vocab plasticity = Cat-1,Cat-2,Cat-3,Cat-4\n"
         "# vocab bmac_category = Cat-1,Cat-2,Cat-3,Cat-4\n";
}

std::string header_row() {
  return "id,path,particle_size,relative_density,fabric_structure,plasticity,bmac_category\n";
}

}  // namespace

TEST(Manifest, WellFormedRowsLoad) {
  const std::string text = vocab_block() + header_row() +
                           "img_001,images/a.png,Cat-1,Cat-2,Cat-3,Cat-4,Cat-2\n"
                           "img_002,images/b.png,Cat-2 or 3,Cat-1,Cat-1,Cat-1,Cat-1\n"
                           "img_003,images/c.png,Cat-4,Cat-4,Cat-4,Cat-4,Cat-4\n";
  const auto m = parse_manifest_text(text, "/data/set1", /*check_files=*/false);
  ASSERT_EQ(m.records.size(), 3u);
  EXPECT_EQ(m.records[0].id, "img_001");
  EXPECT_EQ(m.records[1].labels.of("particle_size"), "Cat-2 or 3");
  EXPECT_EQ(m.records[2].labels.of("bmac_category"), "Cat-4");
  // Paths resolve relative to the manifest directory.
  EXPECT_EQ(m.records[0].path, std::filesystem::path("/data/set1/images/a.png"));
  EXPECT_EQ(m.vocabulary("particle_size").size(), 5u);
}

TEST(Manifest, OutOfVocabularyLabelNamesTargetAndValue) {
  const std::string text = vocab_block() + header_row() +
                           "img_001,a.png,Cat-1,Cat-1,Cat-1,Cat-7,Cat-1\n";
  try {
    parse_manifest_text(text, ".", false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownLabel);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("plasticity"), std::string::npos);
    EXPECT_NE(msg.find("Cat-7"), std::string::npos);
  }
}

TEST(Manifest, DuplicateIdRejected) {
  const std::string text = vocab_block() + header_row() +
                           "img_001,a.png,Cat-1,Cat-1,Cat-1,Cat-1,Cat-1\n"
                           "img_001,b.png,Cat-2,Cat-2,Cat-2,Cat-2,Cat-2\n";
  try {
    parse_manifest_text(text, ".", false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateId);
  }
}

TEST(Manifest, MissingImageFileRejectedWhenChecking) {
  const std::string text = vocab_block() + header_row() +
                           "img_001,definitely_not_there.png,Cat-1,Cat-1,Cat-1,Cat-1,Cat-1\n";
  try {
    parse_manifest_text(text, std::filesystem::temp_directory_path(), true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingFile);
  }
}

TEST(Manifest, MissingVocabularyRejected) {
  const std::string text =
      "# vocab particle_size = Cat-1,Cat-2\n" + header_row() + "img,p.png,Cat-1,x,x,x,x\n";
  EXPECT_THROW(parse_manifest_text(text, ".", false), Error);
}

TEST(Manifest, WrongHeaderRejected) {
  const std::string text = vocab_block() + "id,file,particle_size\nimg,a.png,Cat-1\n";
  try {
    parse_manifest_text(text, ".", false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConfigError);
  }
}

TEST(Manifest, WrongFieldCountRejected) {
  const std::string text = vocab_block() + header_row() + "img_001,a.png,Cat-1,Cat-1\n";
  EXPECT_THROW(parse_manifest_text(text, ".", false), Error);
}

TEST(Manifest, EmptyManifestIsValidButEmpty) {
  const auto m = parse_manifest_text(vocab_block() + header_row(), ".", false);
  EXPECT_TRUE(m.records.empty());
}
