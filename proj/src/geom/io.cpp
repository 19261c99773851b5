#include "stableplace/geom/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "stableplace/error.hpp"

namespace stableplace::geom {

namespace {

std::string lower_ext(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext;
}

// Shortest decimal form that parses back to the same double.
void append_double(std::string& out, double v) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), res.ptr);
}

double parse_double(std::string_view tok, const char* what) {
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    fail(ErrorKind::ParseError, std::string("bad number in ") + what + ": '" +
                                    std::string(tok) + "'");
  return v;
}

long parse_long(std::string_view tok, const char* what) {
  long v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    fail(ErrorKind::ParseError, std::string("bad integer in ") + what + ": '" +
                                    std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------- OBJ

TriMesh parse_obj(std::string_view text) {
  TriMesh mesh;
  std::size_t pos = 0, lineno = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "v") {
      if (tok.size() < 4)
        fail(ErrorKind::ParseError,
             "obj vertex needs 3 coordinates (line " + std::to_string(lineno) + ")");
      mesh.vertices.push_back({parse_double(tok[1], "obj"),
                               parse_double(tok[2], "obj"),
                               parse_double(tok[3], "obj")});
    } else if (tok[0] == "f") {
      if (tok.size() < 4)
        fail(ErrorKind::ParseError,
             "obj face needs 3+ vertices (line " + std::to_string(lineno) + ")");
      std::vector<int> ids;
      for (std::size_t k = 1; k < tok.size(); ++k) {
        // Face corners may carry /vt/vn suffixes; only the vertex id matters.
        std::string_view ref = tok[k].substr(0, tok[k].find('/'));
        long id = parse_long(ref, "obj face");
        if (id < 0) id += static_cast<long>(mesh.vertices.size()) + 1;
        if (id < 1 || id > static_cast<long>(mesh.vertices.size()))
          fail(ErrorKind::ParseError, "obj face index out of range (line " +
                                          std::to_string(lineno) + ")");
        ids.push_back(static_cast<int>(id - 1));
      }
      for (std::size_t k = 1; k + 1 < ids.size(); ++k)
        mesh.faces.push_back({ids[0], ids[k], ids[k + 1]});
    }
    // vt/vn/usemtl/o/g/s lines carry no geometry here.
  }
  if (mesh.vertices.empty()) fail(ErrorKind::ParseError, "obj has no vertices");
  return mesh;
}

std::string format_obj(const TriMesh& mesh) {
  std::string out;
  out.reserve(mesh.vertices.size() * 40 + mesh.faces.size() * 24);
  for (const Vec3& v : mesh.vertices) {
    out += "v ";
    append_double(out, v.x);
    out += ' ';
    append_double(out, v.y);
    out += ' ';
    append_double(out, v.z);
    out += '\n';
  }
  for (const auto& f : mesh.faces) {
    out += "f ";
    out += std::to_string(f[0] + 1);
    out += ' ';
    out += std::to_string(f[1] + 1);
    out += ' ';
    out += std::to_string(f[2] + 1);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------- PLY

enum class PlyType { F32, F64, I8, U8, I16, U16, I32, U32 };

std::size_t ply_size(PlyType t) {
  switch (t) {
    case PlyType::I8:
    case PlyType::U8:
      return 1;
    case PlyType::I16:
    case PlyType::U16:
      return 2;
    case PlyType::F32:
    case PlyType::I32:
    case PlyType::U32:
      return 4;
    case PlyType::F64:
      return 8;
  }
  return 0;
}

PlyType ply_type(std::string_view name) {
  if (name == "float" || name == "float32") return PlyType::F32;
  if (name == "double" || name == "float64") return PlyType::F64;
  if (name == "char" || name == "int8") return PlyType::I8;
  if (name == "uchar" || name == "uint8") return PlyType::U8;
  if (name == "short" || name == "int16") return PlyType::I16;
  if (name == "ushort" || name == "uint16") return PlyType::U16;
  if (name == "int" || name == "int32") return PlyType::I32;
  if (name == "uint" || name == "uint32") return PlyType::U32;
  fail(ErrorKind::ParseError, "unknown ply type '" + std::string(name) + "'");
}

struct PlyProperty {
  std::string name;
  PlyType type = PlyType::F64;
  bool is_list = false;
  PlyType count_type = PlyType::U8;
};

struct PlyElement {
  std::string name;
  std::size_t count = 0;
  std::vector<PlyProperty> props;
};

struct PlyHeader {
  bool binary = false;
  std::vector<PlyElement> elements;
  std::size_t body_offset = 0;
};

PlyHeader parse_ply_header(std::string_view text) {
  PlyHeader h;
  std::size_t pos = 0;
  auto next_line = [&]() -> std::string_view {
    if (pos >= text.size()) fail(ErrorKind::ParseError, "ply header truncated");
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
  };
  if (next_line() != "ply") fail(ErrorKind::ParseError, "missing ply magic");
  for (;;) {
    const auto tok = split_ws(next_line());
    if (tok.empty()) continue;
    if (tok[0] == "comment" || tok[0] == "obj_info") continue;
    if (tok[0] == "format") {
      if (tok.size() < 2) fail(ErrorKind::ParseError, "bad ply format line");
      if (tok[1] == "ascii")
        h.binary = false;
      else if (tok[1] == "binary_little_endian")
        h.binary = true;
      else
        fail(ErrorKind::ParseError,
             "unsupported ply format '" + std::string(tok[1]) + "'");
    } else if (tok[0] == "element") {
      if (tok.size() < 3) fail(ErrorKind::ParseError, "bad ply element line");
      PlyElement e;
      e.name = std::string(tok[1]);
      e.count = static_cast<std::size_t>(parse_long(tok[2], "ply header"));
      h.elements.push_back(std::move(e));
    } else if (tok[0] == "property") {
      if (h.elements.empty())
        fail(ErrorKind::ParseError, "ply property before any element");
      PlyProperty p;
      if (tok.size() >= 5 && tok[1] == "list") {
        p.is_list = true;
        p.count_type = ply_type(tok[2]);
        p.type = ply_type(tok[3]);
        p.name = std::string(tok[4]);
      } else if (tok.size() >= 3) {
        p.type = ply_type(tok[1]);
        p.name = std::string(tok[2]);
      } else {
        fail(ErrorKind::ParseError, "bad ply property line");
      }
      h.elements.back().props.push_back(std::move(p));
    } else if (tok[0] == "end_header") {
      break;
    } else {
      fail(ErrorKind::ParseError,
           "unexpected ply header line '" + std::string(tok[0]) + "'");
    }
  }
  h.body_offset = pos;
  return h;
}

double read_binary_scalar(const char* p, PlyType t) {
  // Host is little-endian x86; bytes are used as-is.
  switch (t) {
    case PlyType::F32: {
      float v;
      std::memcpy(&v, p, 4);
      return static_cast<double>(v);
    }
    case PlyType::F64: {
      double v;
      std::memcpy(&v, p, 8);
      return v;
    }
    case PlyType::I8: {
      std::int8_t v;
      std::memcpy(&v, p, 1);
      return v;
    }
    case PlyType::U8: {
      std::uint8_t v;
      std::memcpy(&v, p, 1);
      return v;
    }
    case PlyType::I16: {
      std::int16_t v;
      std::memcpy(&v, p, 2);
      return v;
    }
    case PlyType::U16: {
      std::uint16_t v;
      std::memcpy(&v, p, 2);
      return v;
    }
    case PlyType::I32: {
      std::int32_t v;
      std::memcpy(&v, p, 4);
      return v;
    }
    case PlyType::U32: {
      std::uint32_t v;
      std::memcpy(&v, p, 4);
      return v;
    }
  }
  return 0.0;
}

// Parsed PLY body: per-element rows of scalars plus list payloads.
struct PlyData {
  PlyHeader header;
  // scalar[elem][prop] -> one value per row; lists[elem][prop] -> rows.
  std::vector<std::vector<std::vector<double>>> scalars;
  std::vector<std::vector<std::vector<std::vector<double>>>> lists;
};

PlyData parse_ply(std::string_view text) {
  PlyData d;
  d.header = parse_ply_header(text);
  const auto& elems = d.header.elements;
  d.scalars.resize(elems.size());
  d.lists.resize(elems.size());
  for (std::size_t e = 0; e < elems.size(); ++e) {
    d.scalars[e].resize(elems[e].props.size());
    d.lists[e].resize(elems[e].props.size());
    for (std::size_t p = 0; p < elems[e].props.size(); ++p) {
      if (elems[e].props[p].is_list)
        d.lists[e][p].reserve(elems[e].count);
      else
        d.scalars[e][p].reserve(elems[e].count);
    }
  }
  if (d.header.binary) {
    const char* p = text.data() + d.header.body_offset;
    const char* end = text.data() + text.size();
    auto need = [&](std::size_t n) {
      if (static_cast<std::size_t>(end - p) < n)
        fail(ErrorKind::ParseError, "ply body truncated");
    };
    for (std::size_t e = 0; e < elems.size(); ++e) {
      for (std::size_t row = 0; row < elems[e].count; ++row) {
        for (std::size_t pi = 0; pi < elems[e].props.size(); ++pi) {
          const auto& prop = elems[e].props[pi];
          if (prop.is_list) {
            need(ply_size(prop.count_type));
            const auto n =
                static_cast<std::size_t>(read_binary_scalar(p, prop.count_type));
            p += ply_size(prop.count_type);
            std::vector<double> vals(n);
            for (std::size_t k = 0; k < n; ++k) {
              need(ply_size(prop.type));
              vals[k] = read_binary_scalar(p, prop.type);
              p += ply_size(prop.type);
            }
            d.lists[e][pi].push_back(std::move(vals));
          } else {
            need(ply_size(prop.type));
            d.scalars[e][pi].push_back(read_binary_scalar(p, prop.type));
            p += ply_size(prop.type);
          }
        }
      }
    }
  } else {
    std::size_t pos = d.header.body_offset;
    auto next_tokens = [&]() {
      while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto tok = split_ws(line);
        if (!tok.empty()) return tok;
      }
      fail(ErrorKind::ParseError, "ply body truncated");
    };
    for (std::size_t e = 0; e < elems.size(); ++e) {
      for (std::size_t row = 0; row < elems[e].count; ++row) {
        const auto tok = next_tokens();
        std::size_t t = 0;
        auto take = [&]() -> std::string_view {
          if (t >= tok.size())
            fail(ErrorKind::ParseError, "ply row has too few values");
          return tok[t++];
        };
        for (std::size_t pi = 0; pi < elems[e].props.size(); ++pi) {
          const auto& prop = elems[e].props[pi];
          if (prop.is_list) {
            const auto n =
                static_cast<std::size_t>(parse_long(take(), "ply list"));
            std::vector<double> vals(n);
            for (std::size_t k = 0; k < n; ++k)
              vals[k] = parse_double(take(), "ply list");
            d.lists[e][pi].push_back(std::move(vals));
          } else {
            d.scalars[e][pi].push_back(parse_double(take(), "ply"));
          }
        }
      }
    }
  }
  return d;
}

int find_prop(const PlyElement& e, std::string_view name) {
  for (std::size_t i = 0; i < e.props.size(); ++i)
    if (e.props[i].name == name) return static_cast<int>(i);
  return -1;
}

TriMesh ply_to_mesh(const PlyData& d) {
  TriMesh mesh;
  int ve = -1, fe = -1;
  for (std::size_t e = 0; e < d.header.elements.size(); ++e) {
    if (d.header.elements[e].name == "vertex") ve = static_cast<int>(e);
    if (d.header.elements[e].name == "face") fe = static_cast<int>(e);
  }
  if (ve < 0) fail(ErrorKind::ParseError, "ply has no vertex element");
  if (fe < 0) fail(ErrorKind::ParseError, "ply has no face element");
  const auto& vel = d.header.elements[static_cast<std::size_t>(ve)];
  const int px = find_prop(vel, "x"), py = find_prop(vel, "y"),
            pz = find_prop(vel, "z");
  if (px < 0 || py < 0 || pz < 0)
    fail(ErrorKind::ParseError, "ply vertex element lacks x/y/z");
  const auto& vx = d.scalars[static_cast<std::size_t>(ve)][static_cast<std::size_t>(px)];
  const auto& vy = d.scalars[static_cast<std::size_t>(ve)][static_cast<std::size_t>(py)];
  const auto& vz = d.scalars[static_cast<std::size_t>(ve)][static_cast<std::size_t>(pz)];
  mesh.vertices.resize(vel.count);
  for (std::size_t i = 0; i < vel.count; ++i)
    mesh.vertices[i] = {vx[i], vy[i], vz[i]};
  const auto& fel = d.header.elements[static_cast<std::size_t>(fe)];
  int pl = find_prop(fel, "vertex_indices");
  if (pl < 0) pl = find_prop(fel, "vertex_index");
  if (pl < 0 || !fel.props[static_cast<std::size_t>(pl)].is_list)
    fail(ErrorKind::ParseError, "ply face element lacks a vertex index list");
  for (const auto& row :
       d.lists[static_cast<std::size_t>(fe)][static_cast<std::size_t>(pl)]) {
    if (row.size() < 3) fail(ErrorKind::ParseError, "ply face with <3 corners");
    for (std::size_t k = 1; k + 1 < row.size(); ++k) {
      std::array<int, 3> f = {static_cast<int>(row[0]),
                              static_cast<int>(row[k]),
                              static_cast<int>(row[k + 1])};
      for (int id : f)
        if (id < 0 || id >= static_cast<int>(mesh.vertices.size()))
          fail(ErrorKind::ParseError, "ply face index out of range");
      mesh.faces.push_back(f);
    }
  }
  return mesh;
}

PointCloud ply_to_cloud(const PlyData& d) {
  int ve = -1;
  for (std::size_t e = 0; e < d.header.elements.size(); ++e)
    if (d.header.elements[e].name == "vertex") ve = static_cast<int>(e);
  if (ve < 0) fail(ErrorKind::ParseError, "ply has no vertex element");
  const auto& vel = d.header.elements[static_cast<std::size_t>(ve)];
  const int px = find_prop(vel, "x"), py = find_prop(vel, "y"),
            pz = find_prop(vel, "z");
  if (px < 0 || py < 0 || pz < 0)
    fail(ErrorKind::ParseError, "ply vertex element lacks x/y/z");
  const auto& cols = d.scalars[static_cast<std::size_t>(ve)];
  PointCloud cloud;
  cloud.points.resize(vel.count);
  for (std::size_t i = 0; i < vel.count; ++i)
    cloud.points[i] = {cols[static_cast<std::size_t>(px)][i],
                       cols[static_cast<std::size_t>(py)][i],
                       cols[static_cast<std::size_t>(pz)][i]};
  const int ps = find_prop(vel, "score");
  if (ps >= 0) cloud.scores = cols[static_cast<std::size_t>(ps)];
  const int plb = find_prop(vel, "label");
  if (plb >= 0) {
    cloud.labels.resize(vel.count);
    for (std::size_t i = 0; i < vel.count; ++i)
      cloud.labels[i] = static_cast<int>(cols[static_cast<std::size_t>(plb)][i]);
  }
  return cloud;
}

void append_le(std::string& out, const void* p, std::size_t n) {
  out.append(static_cast<const char*>(p), n);
}

std::string format_ply_mesh(const TriMesh& mesh) {
  std::string out = "ply\nformat ascii 1.0\n";
  out += "element vertex " + std::to_string(mesh.vertices.size()) + "\n";
  out += "property double x\nproperty double y\nproperty double z\n";
  out += "element face " + std::to_string(mesh.faces.size()) + "\n";
  out += "property list uchar int vertex_indices\nend_header\n";
  for (const Vec3& v : mesh.vertices) {
    append_double(out, v.x);
    out += ' ';
    append_double(out, v.y);
    out += ' ';
    append_double(out, v.z);
    out += '\n';
  }
  for (const auto& f : mesh.faces) {
    out += "3 ";
    out += std::to_string(f[0]);
    out += ' ';
    out += std::to_string(f[1]);
    out += ' ';
    out += std::to_string(f[2]);
    out += '\n';
  }
  return out;
}

std::string format_ply_cloud(const PointCloud& cloud, bool binary) {
  cloud.validate();
  std::string out = "ply\n";
  out += binary ? "format binary_little_endian 1.0\n" : "format ascii 1.0\n";
  out += "element vertex " + std::to_string(cloud.size()) + "\n";
  out += "property double x\nproperty double y\nproperty double z\n";
  if (cloud.has_scores()) out += "property double score\n";
  if (cloud.has_labels()) out += "property int label\n";
  out += "end_header\n";
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const Vec3& p = cloud.points[i];
    if (binary) {
      append_le(out, &p.x, 8);
      append_le(out, &p.y, 8);
      append_le(out, &p.z, 8);
      if (cloud.has_scores()) append_le(out, &cloud.scores[i], 8);
      if (cloud.has_labels()) {
        const std::int32_t lbl = cloud.labels[i];
        append_le(out, &lbl, 4);
      }
    } else {
      append_double(out, p.x);
      out += ' ';
      append_double(out, p.y);
      out += ' ';
      append_double(out, p.z);
      if (cloud.has_scores()) {
        out += ' ';
        append_double(out, cloud.scores[i]);
      }
      if (cloud.has_labels()) {
        out += ' ';
        out += std::to_string(cloud.labels[i]);
      }
      out += '\n';
    }
  }
  return out;
}

// ---------------------------------------------------------------- XYZ

PointCloud parse_xyz(std::string_view text) {
  PointCloud cloud;
  bool any_score = false, any_label = false;
  std::size_t pos = 0, lineno = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tok = split_ws(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok.size() < 3 || tok.size() > 5)
      fail(ErrorKind::ParseError,
           "xyz row needs 3 to 5 columns (line " + std::to_string(lineno) + ")");
    cloud.points.push_back({parse_double(tok[0], "xyz"),
                            parse_double(tok[1], "xyz"),
                            parse_double(tok[2], "xyz")});
    if (tok.size() >= 4) {
      cloud.scores.push_back(parse_double(tok[3], "xyz"));
      any_score = true;
    } else if (any_score) {
      fail(ErrorKind::ParseError, "xyz rows mix score and no-score columns");
    }
    if (tok.size() == 5) {
      cloud.labels.push_back(static_cast<int>(parse_long(tok[4], "xyz")));
      any_label = true;
    } else if (any_label) {
      fail(ErrorKind::ParseError, "xyz rows mix label and no-label columns");
    }
  }
  cloud.validate();
  return cloud;
}

std::string format_xyz(const PointCloud& cloud) {
  cloud.validate();
  std::string out;
  out.reserve(cloud.size() * 48);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const Vec3& p = cloud.points[i];
    append_double(out, p.x);
    out += ' ';
    append_double(out, p.y);
    out += ' ';
    append_double(out, p.z);
    if (cloud.has_scores()) {
      out += ' ';
      append_double(out, cloud.scores[i]);
    }
    if (cloud.has_labels()) {
      out += ' ';
      out += std::to_string(cloud.labels[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(ErrorKind::IoError, "read failed on '" + path + "'");
  return std::move(ss).str();
}

void atomic_write(const std::string& path, const std::string& data) {
  const std::filesystem::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(target.parent_path(), ec);
    if (ec)
      fail(ErrorKind::IoError,
           "cannot create directory '" + target.parent_path().string() + "'");
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::IoError, "cannot open '" + tmp + "' for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) fail(ErrorKind::IoError, "write failed on '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(ErrorKind::IoError, "cannot move '" + tmp + "' onto '" + path + "'");
}

TriMesh load_mesh(const std::string& path) {
  const std::string ext = lower_ext(path);
  const std::string text = read_file(path);
  TriMesh mesh;
  if (ext == ".obj")
    mesh = parse_obj(text);
  else if (ext == ".ply")
    mesh = ply_to_mesh(parse_ply(text));
  else
    fail(ErrorKind::ValidationError, "unsupported mesh format '" + ext + "'");
  mesh.validate();
  return mesh;
}

void save_mesh(const std::string& path, const TriMesh& mesh) {
  mesh.validate();
  const std::string ext = lower_ext(path);
  if (ext == ".obj")
    atomic_write(path, format_obj(mesh));
  else if (ext == ".ply")
    atomic_write(path, format_ply_mesh(mesh));
  else
    fail(ErrorKind::ValidationError, "unsupported mesh format '" + ext + "'");
}

PointCloud load_cloud(const std::string& path) {
  const std::string ext = lower_ext(path);
  const std::string text = read_file(path);
  PointCloud cloud;
  if (ext == ".ply")
    cloud = ply_to_cloud(parse_ply(text));
  else if (ext == ".xyz")
    cloud = parse_xyz(text);
  else
    fail(ErrorKind::ValidationError, "unsupported cloud format '" + ext + "'");
  cloud.validate();
  return cloud;
}

void save_cloud(const std::string& path, const PointCloud& cloud, bool binary) {
  const std::string ext = lower_ext(path);
  if (ext == ".ply")
    atomic_write(path, format_ply_cloud(cloud, binary));
  else if (ext == ".xyz")
    atomic_write(path, format_xyz(cloud));
  else
    fail(ErrorKind::ValidationError, "unsupported cloud format '" + ext + "'");
}

}  // namespace stableplace::geom
