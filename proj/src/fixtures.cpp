#include "entplan/fixtures.hpp"

#include <algorithm>

namespace entplan {

namespace {

std::string cell_name(std::size_t row, std::size_t col) {
  return "r" + std::to_string(row) + "c" + std::to_string(col);
}

std::vector<std::pair<std::string, std::string>> rook_edges(
    std::size_t width, std::size_t height) {
  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(2 * width * height);
  for (std::size_t row = 0; row < height; ++row) {
    for (std::size_t col = 0; col < width; ++col) {
      if (col + 1 < width) {
        edges.emplace_back(cell_name(row, col), cell_name(row, col + 1));
      }
      if (row + 1 < height) {
        edges.emplace_back(cell_name(row, col), cell_name(row + 1, col));
      }
    }
  }
  return edges;
}

// Labels for the 4x4 grid, row-major, chosen per fixture.
using GridLabeler = std::string (*)(std::size_t row, std::size_t col);

std::string by_row(std::size_t row, std::size_t) {
  return "d" + std::to_string(row);
}
std::string by_column(std::size_t, std::size_t col) {
  return "d" + std::to_string(col);
}
std::string by_quadrant(std::size_t row, std::size_t col) {
  return "d" + std::to_string(2 * (row / 2) + col / 2);
}
// Two intact row-districts below two side-by-side square districts.
std::string mixed_plan(std::size_t row, std::size_t col) {
  if (row == 0) return "d0";
  if (row == 1) return "d1";
  return col < 2 ? "d2" : "d3";
}
std::string county_row(std::size_t row, std::size_t) {
  return "county" + std::to_string(row);
}

std::vector<std::string> grid_labels(std::size_t width, std::size_t height,
                                     GridLabeler labeler) {
  std::vector<std::string> labels;
  labels.reserve(width * height);
  for (std::size_t row = 0; row < height; ++row) {
    for (std::size_t col = 0; col < width; ++col) {
      labels.push_back(labeler(row, col));
    }
  }
  return labels;
}

// 4x2 states with per-cell minority fractions in the leftmost columns.
FixtureSpec seg_state(double fraction, std::size_t shaded_columns) {
  FixtureSpec spec;
  spec.width = 4;
  spec.height = 2;
  spec.cell_weight = 16.0;
  spec.category_fractions.assign(spec.width * spec.height, 0.0);
  for (std::size_t row = 0; row < spec.height; ++row) {
    for (std::size_t col = 0; col < shaded_columns; ++col) {
      spec.category_fractions[row * spec.width + col] = fraction;
    }
  }
  std::vector<std::string> tracts;
  for (std::size_t row = 0; row < spec.height; ++row) {
    for (std::size_t col = 0; col < spec.width; ++col) {
      tracts.push_back(cell_name(row, col));
    }
  }
  spec.partitions.emplace("tracts", std::move(tracts));
  return spec;
}

FixtureSpec county_grid(GridLabeler district_labeler) {
  FixtureSpec spec;
  spec.width = 4;
  spec.height = 4;
  spec.cell_weight = 1.0;
  spec.partitions.emplace("districts", grid_labels(4, 4, district_labeler));
  spec.partitions.emplace("counties", grid_labels(4, 4, county_row));
  return spec;
}

}  // namespace

Fixture build_fixture(const std::string& name, const FixtureSpec& spec) {
  if (spec.width < 1 || spec.height < 1) {
    throw Error(ErrorKind::InvalidArgument, "grid dimensions must be >= 1");
  }
  const std::size_t cells = spec.width * spec.height;
  if (!spec.category_fractions.empty() &&
      spec.category_fractions.size() != cells) {
    throw Error(ErrorKind::InvalidArgument,
                "need one category fraction per cell");
  }
  for (double fraction : spec.category_fractions) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
      throw Error(ErrorKind::InvalidArgument,
                  "category fractions must lie in [0,1]");
    }
  }

  Fixture fixture;
  fixture.name = name;

  std::vector<Unit> units;
  units.reserve(cells);
  for (std::size_t row = 0; row < spec.height; ++row) {
    for (std::size_t col = 0; col < spec.width; ++col) {
      units.push_back(Unit{cell_name(row, col), spec.cell_weight});
    }
  }
  fixture.universe = UnitUniverse::create(std::move(units));

  if (spec.category_fractions.empty()) {
    fixture.table.columns = {"pop"};
    for (const Unit& unit : fixture.universe->units()) {
      fixture.table.unit_ids.push_back(unit.id);
      fixture.table.values.push_back({unit.weight});
    }
  } else {
    fixture.table.columns = {"total", "minority"};
    for (std::size_t i = 0; i < cells; ++i) {
      const Unit& unit = fixture.universe->units()[i];
      fixture.table.unit_ids.push_back(unit.id);
      fixture.table.values.push_back(
          {unit.weight, unit.weight * spec.category_fractions[i]});
    }
  }

  for (const auto& [role, labels] : spec.partitions) {
    if (labels.size() != cells) {
      throw Error(ErrorKind::InvalidArgument,
                  "partition '" + role + "' needs one label per cell");
    }
    fixture.partitions.emplace(
        role, LabeledPartition(fixture.universe, labels));
  }

  fixture.adjacency = AdjacencyGraph::build(
      fixture.universe, rook_edges(spec.width, spec.height));
  return fixture;
}

std::vector<std::string> fixture_names() {
  return {
      "aregon",       "barkansas",      "cattachusetts",
      "ducklahoma",   "grid-intact",    "grid-bisected",
      "grid-quartered", "grid-mixed",   "rows-vs-columns",
  };
}

Fixture make_fixture(const std::string& name) {
  FixtureSpec spec;
  if (name == "aregon") {
    spec = seg_state(0.25, 1);
  } else if (name == "barkansas") {
    spec = seg_state(0.125, 2);
  } else if (name == "cattachusetts") {
    spec = seg_state(0.5, 1);
  } else if (name == "ducklahoma") {
    spec = seg_state(0.25, 2);
  } else if (name == "grid-intact") {
    spec = county_grid(by_row);
  } else if (name == "grid-bisected") {
    spec = county_grid(by_quadrant);
  } else if (name == "grid-quartered") {
    spec = county_grid(by_column);
  } else if (name == "grid-mixed") {
    spec = county_grid(mixed_plan);
  } else if (name == "rows-vs-columns") {
    spec.width = 4;
    spec.height = 4;
    spec.cell_weight = 1.0;
    spec.partitions.emplace("rows", grid_labels(4, 4, by_row));
    spec.partitions.emplace("columns", grid_labels(4, 4, by_column));
  } else {
    throw Error(ErrorKind::UnknownFixtureName,
                "no fixture named '" + name + "'");
  }
  return build_fixture(name, spec);
}

std::vector<std::filesystem::path> write_fixture(
    const Fixture& fixture, const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  std::vector<std::filesystem::path> written;

  const auto file = [&](const std::string& suffix) {
    return directory / (fixture.name + "_" + suffix + ".csv");
  };

  write_weight_table(file("weights"), fixture.table);
  written.push_back(file("weights"));
  for (const auto& [role, partition] : fixture.partitions) {
    write_assignment(file(role), partition);
    written.push_back(file(role));
  }
  write_adjacency(file("adjacency"), fixture.adjacency);
  written.push_back(file("adjacency"));

  std::sort(written.begin(), written.end());
  return written;
}

}  // namespace entplan
