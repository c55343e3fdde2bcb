// Copyright (c) 2026 GlyphForge Authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "doctest.h"

#include "core/error.hpp"
#include "core/font_catalog.hpp"
#include "core/png_io.hpp"
#include "core/raster.hpp"
#include "core/render.hpp"
#include "core/rng.hpp"
#include "core/shape_index.hpp"
#include "core/truetype.hpp"
#include "core/unicode.hpp"
#include "test_util.hpp"

using namespace glyphforge;

namespace {

template <typename F>
Errc error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ok;
}

std::string assets(const char* rel) {
  return (gftest::assets_dir() / rel).string();
}

std::string fixture(const char* rel) {
  return (gftest::fixtures_dir() / rel).string();
}

FontCatalog assets_catalog(bool with_charsets) {
  FontCatalog catalog =
      FontCatalog::load_manifest(assets("fonts/manifest.json"));
  if (with_charsets) {
    std::map<Lang, CharSet> charsets;
    for (Lang lang : kAllLangs)
      charsets.emplace(
          lang, load_charset(assets(("charsets/" + std::string(lang_code(lang)) +
                                     ".txt").c_str())));
    catalog.attach_charsets(std::move(charsets));
  }
  return catalog;
}

CharSet small_cn_charset() {
  CharSet cs;
  cs.language = Lang::cn;
  for (const char* u8 : {"了", "子", "白", "自", "问",
                         "间", "光", "觉", "星", "里",
                         "一", "二", "三", "口", "日"})
    cs.scalars.push_back(uni::decode_utf8(u8)[0]);
  std::sort(cs.scalars.begin(), cs.scalars.end());
  cs.declared_size = static_cast<int>(cs.scalars.size());
  return cs;
}

}  // namespace

TEST_CASE("truetype parses the latin fixture") {
  ttf::Font font = ttf::Font::load_file(fixture("az_only.ttf"));
  CHECK(font.units_per_em() > 0);
  CHECK(font.ascender() > 0);
  CHECK(font.coverage().size() == 52);
  uint16_t ga = font.glyph_index(U'a');
  CHECK(ga != 0);
  CHECK(font.glyph_index(U'A') != 0);
  CHECK(font.glyph_index(U'0') == 0);
  CHECK(font.glyph_index(U'中') == 0);
  CHECK(font.advance(ga) > 0);
  CHECK(!font.outline(ga).empty());
}

TEST_CASE("truetype rejects damaged files and tolerates empty cmaps") {
  CHECK(error_code_of([] { ttf::Font::load_file(fixture("not_a_font.ttf")); }) ==
        Errc::unparseable_font);
  ttf::Font empty = ttf::Font::load_file(fixture("empty_coverage.ttf"));
  CHECK(empty.coverage().empty());
  CHECK(error_code_of(
            [] { ttf::Font::load_file("/nonexistent/deeply/nothing.ttf"); }) ==
        Errc::io);
}

TEST_CASE("composite glyph outlines resolve in shipped fonts") {
  ttf::Font font = ttf::Font::load_file(assets("fonts/DejaVuSans.ttf"));
  // Accented capitals are composites of a base and a mark in DejaVu.
  uint16_t g = font.glyph_index(U'É');
  REQUIRE(g != 0);
  CHECK(!font.outline(g).empty());
}

TEST_CASE("register font assigns sequential prefixed ids") {
  FontCatalog catalog;
  FontRef a = catalog
                  .register_font(fixture("az_only.ttf"), Lang::en,
                                 FontLicense::ofl, FontCategory::sans, "AZ")
                  .id;
  FontRef b =
      catalog.register_font(fixture("az_only.ttf"), Lang::en, FontLicense::other)
          .id;
  CHECK(a == FontRef{FontPrefix::en, 0});
  CHECK(b == FontRef{FontPrefix::en, 1});
  FontRef c =
      catalog.register_font(fixture("az_only.ttf"), Lang::cn, FontLicense::ofl)
          .id;
  CHECK(c == FontRef{FontPrefix::cn, 0});
  CHECK(error_code_of([&] {
          catalog.register_font(fixture("empty_coverage.ttf"), Lang::en,
                                FontLicense::ofl);
        }) == Errc::empty_coverage);
  CHECK(error_code_of([&] {
          catalog.register_font(fixture("not_a_font.ttf"), Lang::en,
                                FontLicense::ofl);
        }) == Errc::unparseable_font);
}

TEST_CASE("manifest loads ten entries with resolved paths") {
  FontCatalog catalog = assets_catalog(false);
  CHECK(catalog.entries().size() == 10);
  const FontEntry& en0 = catalog.get(FontRef{FontPrefix::en, 0});
  CHECK(en0.family == "GlyphForge Sans");
  CHECK(en0.language == Lang::en);
  CHECK(en0.license == FontLicense::ofl);
  CHECK(catalog.find(FontRef{FontPrefix::en, 9}) == nullptr);
  CHECK(error_code_of([&] { catalog.get(FontRef{FontPrefix::en, 9}); }) ==
        Errc::no_usable_font);
  CatalogStats stats = catalog.stats();
  CHECK(stats.per_language.at(Lang::en) == std::pair<int, int>{4, 2});
  CHECK(stats.per_language.at(Lang::cn) == std::pair<int, int>{2, 2});
  CHECK(stats.per_language.at(Lang::jp) == std::pair<int, int>{2, 2});
  CHECK(stats.per_language.at(Lang::kr) == std::pair<int, int>{2, 2});
}

TEST_CASE("coverage check lists missing scalars sorted unique") {
  FontCatalog catalog = assets_catalog(false);
  const FontEntry& en0 = catalog.get(FontRef{FontPrefix::en, 0});
  auto missing = catalog.coverage_check(en0, "ab 中中一");
  REQUIRE(missing.size() == 2);
  CHECK(missing[0] == U'一');
  CHECK(missing[1] == U'中');
  CHECK(catalog.coverage_check(en0, "plain text").empty());
}

TEST_CASE("fonts_for screens by charset and required text") {
  FontCatalog catalog = assets_catalog(true);
  auto ru = catalog.fonts_for(Lang::ru);
  REQUIRE(ru.size() == 4);
  CHECK(ru[0]->id == FontRef{FontPrefix::en, 0});
  CHECK(std::is_sorted(ru.begin(), ru.end(),
                       [](auto* a, auto* b) { return a->id.id < b->id.id; }));
  auto cn = catalog.fonts_for(Lang::cn);
  REQUIRE(cn.size() == 2);
  CHECK(cn[0]->id == FontRef{FontPrefix::cn, 0});
  // No English-declared font covers CJK scalars.
  CHECK(error_code_of([&] {
          catalog.fonts_for(Lang::en, std::optional<std::string>("中"));
        }) == Errc::no_usable_font);
  CHECK(catalog.fonts_for(Lang::en, std::optional<std::string>("word"))
            .size() == 4);
}

TEST_CASE("scanline fill rasterizes a square with nonzero winding") {
  // 10x10 square from (2,2) to (8,8) in font units with scale 1, baseline 10.
  ttf::Outline outline;
  outline.contours.push_back({{2, 2, true}, {8, 2, true}, {8, 8, true}, {2, 8, true}});
  std::vector<raster::Edge> edges;
  raster::add_outline(edges, outline, 1.0, 0.0, 10.0);
  Bitmap mask(10, 10);
  raster::fill_nonzero(edges, mask);
  CHECK(mask.ink() == 36);
  CHECK(mask.at(4, 4) == 1);
  CHECK(mask.at(0, 0) == 0);
  // A hole wound the opposite way subtracts.
  ttf::Outline ring = outline;
  ring.contours.push_back({{4, 4, true}, {4, 6, true}, {6, 6, true}, {6, 4, true}});
  edges.clear();
  raster::add_outline(edges, ring, 1.0, 0.0, 10.0);
  Bitmap mask2(10, 10);
  raster::fill_nonzero(edges, mask2);
  CHECK(mask2.ink() == 32);
  CHECK(mask2.at(4, 4) == 0);
}

TEST_CASE("blit clips to the given rectangle") {
  Image img(10, 10, 0, 0, 0);
  Bitmap mask(10, 10);
  for (int y = 0; y < 10; ++y)
    for (int x = 0; x < 10; ++x) mask.at(x, y) = 1;
  blit_mask(img, mask, 255, 0, 0, 2, 3, 4, 4);
  CHECK(img.at(2, 3)[0] == 255);
  CHECK(img.at(5, 6)[0] == 255);
  CHECK(img.at(6, 6)[0] == 0);
  CHECK(img.at(1, 3)[0] == 0);
}

TEST_CASE("png round trips deterministically") {
  Image img(13, 7);
  Rng rng(5);
  for (auto& b : img.px) b = static_cast<uint8_t>(rng.below(256));
  std::vector<uint8_t> bytes = png::encode(img);
  CHECK(png::encode(img) == bytes);
  Image back = png::decode(bytes);
  CHECK(back == img);
  auto tmp = gftest::fresh_tmp("png_roundtrip");
  png::write_file((tmp / "x.png").string(), img);
  CHECK(png::read_file((tmp / "x.png").string()) == img);
  std::vector<uint8_t> junk = {1, 2, 3, 4};
  CHECK(error_code_of([&] { png::decode(junk); }) == Errc::io);
}

TEST_CASE("palette maps ids and rejects unknown ones") {
  Palette palette = load_palette(assets("palette.json"));
  REQUIRE(palette.colors.size() >= 100);
  CHECK(palette.rgb(0) == std::array<uint8_t, 3>{255, 255, 255});
  CHECK(error_code_of([&] {
          palette.rgb(static_cast<int>(palette.colors.size()));
        }) == Errc::config_invalid);
  CHECK(error_code_of([&] { palette.rgb(-1); }) == Errc::config_invalid);
}

TEST_CASE("layout fit walks the size down until text fits") {
  FontCatalog catalog = assets_catalog(false);
  const FontEntry& en0 = catalog.get(FontRef{FontPrefix::en, 0});
  Renderer renderer(catalog, load_palette(assets("palette.json")));
  TextSpan span{"alpha beta gamma", 1, en0.id, Lang::en, {}};
  Rect box{10, 10, 200, 80};
  FitResult fit = renderer.layout_fit(span, box, en0, 60, 8);
  CHECK(fit.font_size >= 8);
  CHECK(fit.font_size <= 60);
  CHECK(fit.ink_bbox.x >= box.x);
  CHECK(fit.ink_bbox.y >= box.y);
  CHECK(fit.ink_bbox.x + fit.ink_bbox.w <= box.x + box.w);
  CHECK(fit.ink_bbox.y + fit.ink_bbox.h <= box.y + box.h);
  CHECK(error_code_of([&] {
          renderer.layout_fit(span, Rect{0, 0, 6, 6}, en0, 60, 8);
        }) == Errc::cannot_fit);
}

TEST_CASE("glyph rendering is deterministic and colors from the palette") {
  FontCatalog catalog = assets_catalog(false);
  Palette palette = load_palette(assets("palette.json"));
  auto red = palette.rgb(1);
  Renderer renderer(catalog, std::move(palette));
  DesignDocument doc;
  doc.canvas_w = 200;
  doc.canvas_h = 100;
  doc.spans.push_back(TextSpan{"Hi", 1, {FontPrefix::en, 0}, Lang::en,
                               Rect{10, 10, 180, 80}});
  Image a = renderer.render_glyph_image(doc);
  Image b = renderer.render_glyph_image(doc);
  CHECK(a == b);
  CHECK(png::encode(a) == png::encode(b));
  REQUIRE(a.w == 200);
  REQUIRE(a.h == 100);
  std::size_t ink = 0, black = 0;
  for (int y = 0; y < a.h; ++y)
    for (int x = 0; x < a.w; ++x) {
      const uint8_t* p = a.at(x, y);
      if (p[0] == red[0] && p[1] == red[1] && p[2] == red[2]) ++ink;
      if (p[0] == 0 && p[1] == 0 && p[2] == 0) ++black;
    }
  CHECK(ink > 20);
  CHECK(ink + black == static_cast<std::size_t>(a.w) * a.h);
}

TEST_CASE("design rendering composites over backgrounds") {
  FontCatalog catalog = assets_catalog(false);
  Renderer renderer(catalog, load_palette(assets("palette.json")));
  DesignDocument doc;
  doc.canvas_w = 120;
  doc.canvas_h = 60;
  doc.spans.push_back(TextSpan{"ok", 2, {FontPrefix::en, 0}, Lang::en,
                               Rect{5, 5, 110, 50}});
  Image solid = renderer.render_design_image(doc, std::array<uint8_t, 3>{200, 210, 220});
  CHECK(solid.at(0, 0)[0] == 200);
  CHECK(solid.at(0, 0)[1] == 210);
  Image bg(120, 60, 9, 9, 9);
  Image composed = renderer.render_design_image(doc, bg);
  CHECK(composed.at(0, 0)[0] == 9);
  Image wrong(50, 50);
  CHECK(error_code_of([&] { renderer.render_design_image(doc, wrong); }) ==
        Errc::background_size_mismatch);
}

TEST_CASE("rendering spans with uncovered scalars is an error") {
  FontCatalog catalog = assets_catalog(false);
  Renderer renderer(catalog, load_palette(assets("palette.json")));
  DesignDocument doc;
  doc.canvas_w = 100;
  doc.canvas_h = 50;
  doc.spans.push_back(TextSpan{"中", 1, {FontPrefix::en, 0}, Lang::cn,
                               Rect{5, 5, 90, 40}});
  CHECK(error_code_of([&] { renderer.render_glyph_image(doc); }) ==
        Errc::missing_glyphs);
  doc.spans[0].color_id = 100000;
  doc.spans[0].content = "x";
  CHECK(error_code_of([&] { renderer.render_glyph_image(doc); }) ==
        Errc::config_invalid);
}

TEST_CASE("shape index ranks raster neighbours and excludes self") {
  FontCatalog catalog = assets_catalog(false);
  CharSet cs = small_cn_charset();
  ShapeIndex index = ShapeIndex::build(cs, catalog,
                                       catalog.get(FontRef{FontPrefix::cn, 0}),
                                       32, 5);
  CHECK(index.size() == cs.scalars.size());
  CHECK(index.warnings().empty());
  for (char32_t ch : cs.scalars) {
    REQUIRE(index.known(ch));
    auto cands = index.lookup(ch, 5);
    CHECK(!cands.empty());
    CHECK(cands.size() <= 5);
    for (char32_t c : cands) CHECK(c != ch);
  }
  // Ranking is a pure function of the rasters: rebuilding reproduces it.
  ShapeIndex again = ShapeIndex::build(cs, catalog,
                                       catalog.get(FontRef{FontPrefix::cn, 0}),
                                       32, 5);
  for (char32_t ch : cs.scalars) CHECK(again.lookup(ch, 5) == index.lookup(ch, 5));
}

TEST_CASE("shape index build validates parameters and coverage") {
  FontCatalog catalog = assets_catalog(false);
  CharSet cs = small_cn_charset();
  const FontEntry& cn0 = catalog.get(FontRef{FontPrefix::cn, 0});
  CHECK(error_code_of([&] { ShapeIndex::build(cs, catalog, cn0, 4, 5); }) ==
        Errc::config_invalid);
  CHECK(error_code_of([&] { ShapeIndex::build(cs, catalog, cn0, 32, 0); }) ==
        Errc::config_invalid);
  // A charset scalar the font does not cover is skipped with a warning.
  CharSet with_gap = cs;
  with_gap.scalars.insert(
      std::lower_bound(with_gap.scalars.begin(), with_gap.scalars.end(),
                       U'ﬁ'),
      U'ﬁ');
  ShapeIndex index = ShapeIndex::build(with_gap, catalog, cn0, 32, 3);
  CHECK(index.size() == cs.scalars.size());
  REQUIRE(index.warnings().size() == 1);
  CHECK(index.warnings()[0].find("FB01") != std::string::npos);
  CHECK(!index.known(U'ﬁ'));
  CHECK(error_code_of([&] { index.lookup(U'ﬁ', 1); }) ==
        Errc::unknown_character);
  // A fully uncovered charset cannot build at all.
  CharSet latin;
  latin.language = Lang::cn;
  latin.scalars = {U'ﬁ', U'ﬂ'};
  latin.declared_size = 2;
  CHECK(error_code_of([&] { ShapeIndex::build(latin, catalog, cn0, 32, 3); }) ==
        Errc::empty_coverage);
}

TEST_CASE("shape index saves loads and honours overrides") {
  FontCatalog catalog = assets_catalog(false);
  CharSet cs = small_cn_charset();
  ShapeIndex index = ShapeIndex::build(cs, catalog,
                                       catalog.get(FontRef{FontPrefix::cn, 0}),
                                       32, 4);
  auto tmp = gftest::fresh_tmp("shape_index");
  std::string path = (tmp / "index.tsv").string();
  index.save(path);
  ShapeIndex loaded = ShapeIndex::load(path);
  CHECK(loaded.size() == index.size());
  for (char32_t ch : cs.scalars) CHECK(loaded.lookup(ch, 4) == index.lookup(ch, 4));

  loaded.merge_overrides((gftest::assets_dir() / "shape_overrides.tsv").string());
  CHECK(loaded.lookup(uni::decode_utf8("了")[0], 1) ==
        std::vector<char32_t>{uni::decode_utf8("子")[0]});
  CHECK(error_code_of([&] {
          loaded.add_override(U'一', U'一');
        }) == Errc::config_invalid);
  CHECK(error_code_of([&] { loaded.lookup(U'一', 0); }) ==
        Errc::config_invalid);
  CHECK(error_code_of([] { ShapeIndex::load("/nonexistent/x.tsv"); }) ==
        Errc::io);
}
