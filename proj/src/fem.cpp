#include "chmhd/fem.hpp"

#include <stdexcept>

#include <Eigen/Dense>

namespace chmhd {

ReferenceElement reference_element(int degree) {
  if (degree != 1 && degree != 2)
    throw std::invalid_argument("reference_element: degree must be 1 or 2");
  ReferenceElement el;
  el.degree = degree;
  el.node_count = degree == 1 ? 3 : 6;
  el.nodes = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  if (degree == 2) {
    el.nodes.emplace_back(0.5, 0.0);
    el.nodes.emplace_back(0.5, 0.5);
    el.nodes.emplace_back(0.0, 0.5);
  }
  return el;
}

BasisEval eval_basis(const ReferenceElement& element, const Eigen::Vector2d& point) {
  const double x = point.x(), y = point.y();
  const double l0 = 1.0 - x - y, l1 = x, l2 = y;

  BasisEval out;
  out.values.resize(element.node_count);
  out.gradients.resize(element.node_count, 2);

  if (element.degree == 1) {
    out.values << l0, l1, l2;
    out.gradients << -1.0, -1.0,
                      1.0,  0.0,
                      0.0,  1.0;
    return out;
  }

  // P2: vertex functions l_i (2 l_i - 1), edge functions 4 l_i l_j
  out.values << l0 * (2.0 * l0 - 1.0),
                l1 * (2.0 * l1 - 1.0),
                l2 * (2.0 * l2 - 1.0),
                4.0 * l0 * l1,
                4.0 * l1 * l2,
                4.0 * l2 * l0;
  // grad l0 = (-1,-1), grad l1 = (1,0), grad l2 = (0,1)
  out.gradients << -(4.0 * l0 - 1.0), -(4.0 * l0 - 1.0),
                    4.0 * l1 - 1.0,    0.0,
                    0.0,               4.0 * l2 - 1.0,
                    4.0 * (l0 - l1),  -4.0 * l1,
                    4.0 * l2,          4.0 * l1,
                   -4.0 * l2,          4.0 * (l0 - l2);
  return out;
}

namespace {

struct RawRule {
  int degree;
  std::vector<std::pair<std::array<double, 2>, double>> data;  // ((x,y), weight)
};

// Degrees 1-6: Dunavant symmetric rules (positive weights only, so degree 3
// falls through to the 6-point degree-4 rule). Degrees 8 and 10: collapsed
// Gauss-Jacobi product rules, tabulated to full double precision.
const std::vector<RawRule>& rule_table() {
  auto sym3 = [](std::vector<std::pair<std::array<double, 2>, double>>& d, double a, double w) {
    // barycentric (1-2a, a, a) permutations on vertices (l0,l1,l2); reference
    // coords are (l1, l2)
    d.push_back({{a, a}, w});
    d.push_back({{1.0 - 2.0 * a, a}, w});
    d.push_back({{a, 1.0 - 2.0 * a}, w});
  };
  auto sym6 = [](std::vector<std::pair<std::array<double, 2>, double>>& d, double a, double b, double w) {
    const double c = 1.0 - a - b;
    d.push_back({{a, b}, w});
    d.push_back({{b, a}, w});
    d.push_back({{a, c}, w});
    d.push_back({{c, a}, w});
    d.push_back({{b, c}, w});
    d.push_back({{c, b}, w});
  };

  static const std::vector<RawRule> table = [&] {
    std::vector<RawRule> t;

    {
      RawRule r{1, {}};
      r.data.push_back({{1.0 / 3.0, 1.0 / 3.0}, 0.5});
      t.push_back(std::move(r));
    }
    {
      RawRule r{2, {}};
      sym3(r.data, 1.0 / 6.0, 1.0 / 6.0);
      t.push_back(std::move(r));
    }
    {
      RawRule r{4, {}};
      sym3(r.data, 0.445948490915965, 0.5 * 0.223381589678011);
      sym3(r.data, 0.091576213509771, 0.5 * 0.109951743655322);
      t.push_back(std::move(r));
    }
    {
      RawRule r{5, {}};
      r.data.push_back({{1.0 / 3.0, 1.0 / 3.0}, 0.5 * 0.225});
      sym3(r.data, 0.470142064105115, 0.5 * 0.132394152788506);
      sym3(r.data, 0.101286507323456, 0.5 * 0.125939180544827);
      t.push_back(std::move(r));
    }
    {
      RawRule r{6, {}};
      sym3(r.data, 0.249286745170910, 0.5 * 0.116786275726379);
      sym3(r.data, 0.063089014491502, 0.5 * 0.050844906370207);
      sym6(r.data, 0.310352451033785, 0.053145049844816, 0.5 * 0.082851075618374);
      t.push_back(std::move(r));
    }
    {
      RawRule r{8, {
      {{0.039809857051468722, 0.045042593569803738}, 0.011465080351592518},
      {{0.039809857051468722, 0.22157860955237921}, 0.023161221929498342},
      {{0.039809857051468722, 0.48009507147426567}, 0.027528985664469759},
      {{0.039809857051468722, 0.73861153339615204}, 0.023161221929498342},
      {{0.039809857051468722, 0.91514754937872755}, 0.011465080351592518},
      {{0.19801341787360821, 0.037621252345111204}, 0.019804083132047359},
      {{0.19801341787360821, 0.18507071026738944}, 0.04000728738616046},
      {{0.19801341787360821, 0.40099329106319592}, 0.047551897057954054},
      {{0.19801341787360821, 0.61691587185900232}, 0.04000728738616046},
      {{0.19801341787360821, 0.76436532978128058}, 0.019804083132047359},
      {{0.43797481024738616, 0.026364644944470925}, 0.017341506431365696},
      {{0.43797481024738616, 0.12969593678225411}, 0.035032504503371732},
      {{0.43797481024738616, 0.28101259487630692}, 0.041638965215194987},
      {{0.43797481024738616, 0.43232925297035968}, 0.035032504503371732},
      {{0.43797481024738616, 0.53566054480814285}, 0.017341506431365696},
      {{0.69546427335363614, 0.014285794395571387}, 0.0087554991821638291},
      {{0.69546427335363614, 0.070276292008281713}, 0.017687452110483469},
      {{0.69546427335363614, 0.15226786332318193}, 0.021022967487322082},
      {{0.69546427335363614, 0.23425943463808213}, 0.017687452110483469},
      {{0.69546427335363614, 0.29024993225079243}, 0.0087554991821638291},
      {{0.90146491420117358, 0.0046222884650464298}, 0.0018655521668778402},
      {{0.90146491420117358, 0.022738483063764033}, 0.0037687016953276264},
      {{0.90146491420117358, 0.049267542899413208}, 0.0044794067972813659},
      {{0.90146491420117358, 0.075796602735062377}, 0.0037687016953276264},
      {{0.90146491420117358, 0.093912797333779982}, 0.0018655521668778402},
      }};
      t.push_back(std::move(r));
    }
    {
      RawRule r{10, {
      {{0.029316427159784941, 0.032775366614459879}, 0.0061942653526588613},
      {{0.029316427159784941, 0.16442924159482744}, 0.013043394330082867},
      {{0.029316427159784941, 0.36952992437237664}, 0.016917505680012716},
      {{0.029316427159784941, 0.60115364846783836}, 0.016917505680012716},
      {{0.029316427159784941, 0.80625433124538759}, 0.013043394330082867},
      {{0.029316427159784941, 0.9379082062257551}, 0.0061942653526588613},
      {{0.1480785996684843, 0.028765333012559118}, 0.011610874766997507},
      {{0.1480785996684843, 0.14431148695041665}, 0.024449262258057821},
      {{0.1480785996684843, 0.32431830458877597}, 0.031711111590704007},
      {{0.1480785996684843, 0.52760309574273967}, 0.031711111590704007},
      {{0.1480785996684843, 0.70760991338109902}, 0.024449262258057821},
      {{0.1480785996684843, 0.82315606731895652}, 0.011610874766997507},
      {{0.3369846902811543, 0.022386872978030627}, 0.012060606404265088},
      {{0.3369846902811543, 0.1123116817809537}, 0.025396271589047635},
      {{0.3369846902811543, 0.25240356807651798}, 0.032939398900786683},
      {{0.3369846902811543, 0.41061174164232772}, 0.032939398900786683},
      {{0.3369846902811543, 0.55070362793789196}, 0.025396271589047635},
      {{0.3369846902811543, 0.64062843674081504}, 0.012060606404265088},
      {{0.55867151877155019, 0.014901563366671153}, 0.0084515357969431083},
      {{0.55867151877155019, 0.074758973462649092}, 0.017796575997026262},
      {{0.55867151877155019, 0.16800951912119183}, 0.023082463651358229},
      {{0.55867151877155019, 0.27331896210725798}, 0.023082463651358229},
      {{0.55867151877155019, 0.36656950776580072}, 0.017796575997026262},
      {{0.55867151877155019, 0.42642691786177866}, 0.0084515357969431083},
      {{0.7692338620300545, 0.007791874701286429}, 0.0037652982126916679},
      {{0.7692338620300545, 0.039090700732824245}, 0.0079286673337964804},
      {{0.7692338620300545, 0.08785045497599718}, 0.010283617228766331},
      {{0.7692338620300545, 0.1429156829939483}, 0.010283617228766331},
      {{0.7692338620300545, 0.19167543723712124}, 0.0079286673337964804},
      {{0.7692338620300545, 0.22297426326865907}, 0.0037652982126916679},
      {{0.92694567131974104, 0.0024666971526702448}, 0.00074854256123631734},
      {{0.92694567131974104, 0.012375060417440052}, 0.0015762217540235878},
      {{0.92694567131974104, 0.027811082115360607}, 0.0020443865915448591},
      {{0.92694567131974104, 0.045243246564898358}, 0.0020443865915448591},
      {{0.92694567131974104, 0.060679268262818907}, 0.0015762217540235878},
      {{0.92694567131974104, 0.070587631527588721}, 0.00074854256123631734},
      }};
      t.push_back(std::move(r));
    }
    return t;
  }();
  return table;
}

}  // namespace

QuadratureRule gauss_rule(int min_degree) {
  if (min_degree < 1 || min_degree > 10)
    throw std::invalid_argument("gauss_rule: degree must be in [1, 10]");
  for (const RawRule& raw : rule_table()) {
    if (raw.degree >= min_degree) {
      QuadratureRule rule;
      rule.degree = raw.degree;
      for (const auto& [p, w] : raw.data) {
        rule.points.emplace_back(p[0], p[1]);
        rule.weights.push_back(w);
      }
      return rule;
    }
  }
  throw std::logic_error("gauss_rule: no rule found");  // unreachable
}

AffineMap affine_map(const Mesh& mesh, int tri) {
  const auto& t = mesh.triangles[tri];
  const Eigen::Vector2d& a = mesh.vertices[t[0]];
  const Eigen::Vector2d& b = mesh.vertices[t[1]];
  const Eigen::Vector2d& c = mesh.vertices[t[2]];

  AffineMap map;
  map.origin = a;
  map.jacobian.col(0) = b - a;
  map.jacobian.col(1) = c - a;
  map.det = map.jacobian.determinant();
  if (map.det <= 0.0) throw std::invalid_argument("affine_map: degenerate or flipped triangle");
  map.inv_transpose = map.jacobian.inverse().transpose();
  return map;
}

Eigen::Matrix<double, Eigen::Dynamic, 2> physical_gradients(
    const AffineMap& map, const Eigen::Matrix<double, Eigen::Dynamic, 2>& ref_gradients) {
  if (map.det <= 0.0) throw std::invalid_argument("physical_gradients: degenerate map");
  return ref_gradients * map.inv_transpose.transpose();
}

}  // namespace chmhd
