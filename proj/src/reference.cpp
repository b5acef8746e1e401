#include "rdematel/reference.hpp"

namespace rdematel {

namespace {

Matrix<double> dense(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix<double> m(static_cast<Eigen::Index>(rows.size()),
                   static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

Vector<double> vec(std::initializer_list<double> xs) {
  Vector<double> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

PaperReference build() {
  PaperReference p;
  p.ids = {"I1", "I2", "I3", "I4", "E1", "E2", "E3"};

  p.expert1.resize(7, 7);
  p.expert1 << 0, 4, 4, 0, 0, 4, 0,
               1, 0, 2, 0, 0, 4, 0,
               4, 3, 0, 0, 0, 4, 0,
               4, 2, 4, 0, 0, 3, 0,
               2, 2, 1, 0, 0, 3, 3,
               4, 4, 4, 0, 0, 0, 0,
               3, 3, 2, 0, 0, 3, 0;

  p.group = RoughMatrix<double>(
      dense({{0, 1.8186, 1.7305, 1.3424, 1.6838, 1.4919, 1.2090},
             {1.8029, 0, 1.4219, 1.3329, 1.2576, 1.5152, 1.5443},
             {1.7881, 1.6967, 0, 1.6510, 0.9614, 1.8029, 1.3305},
             {1.8029, 1.5514, 1.7062, 0, 0.7319, 1.4862, 1.4186},
             {1.5062, 1.7376, 1.3405, 1.0914, 0, 1.2614, 1.8000},
             {1.6500, 1.4400, 1.7000, 1.1400, 0.8700, 0, 1.0100},
             {1.6900, 1.6900, 1.4400, 1.3800, 1.8000, 1.3500, 0}}),
      dense({{0, 3.2600, 3.2076, 3.0724, 3.3281, 3.2486, 2.8690},
             {3.5333, 0, 2.9943, 2.8724, 2.8814, 3.1843, 3.3905},
             {3.1119, 3.2381, 0, 3.1676, 2.4419, 3.0776, 3.0586},
             {3.5333, 3.1062, 3.3719, 0, 2.3019, 2.7729, 2.8486},
             {3.2814, 3.2257, 2.9086, 2.9724, 0, 2.1400, 3.5300},
             {3.2100, 3.1700, 3.3100, 2.9700, 2.7100, 0, 2.7900},
             {3.2300, 3.2500, 3.0700, 3.0000, 3.1600, 2.9700, 0}}));

  p.normalized = RoughMatrix<double>(
      dense({{0, 0.0643, 0.0612, 0.0475, 0.0596, 0.0528, 0.0428},
             {0.0638, 0, 0.0503, 0.0472, 0.0445, 0.0536, 0.0546},
             {0.0633, 0.0600, 0, 0.0584, 0.0340, 0.0638, 0.0471},
             {0.0638, 0.0549, 0.0604, 0, 0.0259, 0.0526, 0.0502},
             {0.0533, 0.0615, 0.0474, 0.0386, 0, 0.0446, 0.0637},
             {0.0584, 0.0510, 0.0602, 0.0403, 0.0308, 0, 0.0357},
             {0.0598, 0.0598, 0.0510, 0.0488, 0.0637, 0.0478, 0}}),
      dense({{0, 0.1153, 0.1135, 0.1087, 0.1178, 0.1149, 0.1015},
             {0.1250, 0, 0.1059, 0.1016, 0.1020, 0.1127, 0.1200},
             {0.1101, 0.1146, 0, 0.1121, 0.0864, 0.1089, 0.1082},
             {0.1250, 0.1099, 0.1193, 0, 0.0814, 0.0981, 0.1008},
             {0.1161, 0.1141, 0.1029, 0.1052, 0, 0.0757, 0.1249},
             {0.1136, 0.1122, 0.1171, 0.1051, 0.0959, 0, 0.0987},
             {0.1143, 0.1150, 0.1086, 0.1061, 0.1118, 0.1051, 0}}));

  p.total_lower = dense({{0.0272, 0.0870, 0.0826, 0.0667, 0.0759, 0.0741, 0.0634},
                         {0.0861, 0.0254, 0.0719, 0.0656, 0.0618, 0.0738, 0.0730},
                         {0.0867, 0.0828, 0.0250, 0.0766, 0.0525, 0.0840, 0.0667},
                         {0.0858, 0.0769, 0.0807, 0.0204, 0.0443, 0.0727, 0.0683},
                         {0.0763, 0.0830, 0.0687, 0.0575, 0.0192, 0.0653, 0.0812},
                         {0.0784, 0.0709, 0.0781, 0.0572, 0.0468, 0.0206, 0.0532},
                         {0.0838, 0.0832, 0.0735, 0.0680, 0.0802, 0.0696, 0.0226}});

  p.sums_x = {RoughNumber(0.5243, 2.0035), RoughNumber(0.5092, 1.9446),
              RoughNumber(0.4806, 1.9093), RoughNumber(0.4120, 1.8356),
              RoughNumber(0.3808, 1.7241), RoughNumber(0.4599, 1.7803),
              RoughNumber(0.4284, 1.8735)};
  p.sums_y = {RoughNumber(0.4769, 1.9200), RoughNumber(0.4576, 1.9100),
              RoughNumber(0.4743, 1.8397), RoughNumber(0.4490, 1.8255),
              RoughNumber(0.4512, 1.8374), RoughNumber(0.4052, 1.8452),
              std::nullopt};

  p.crisp_x = vec({3.6135, 3.4416, 3.3429, 3.1392, 2.8362, 2.9834, 3.2453});
  p.crisp_y = vec({3.4314, 3.4031, 3.1950, 3.1560, 3.1900, 3.2142, 3.3505});
  p.prominence = vec({7.0448, 6.8447, 6.5379, 6.2952, 6.0262, 6.1976, 6.5958});
  p.relation = vec({0.1821, 0.0385, 0.1479, -0.0169, -0.3539, -0.2308, -0.1052});

  p.importance = vec({7.047184, 6.844819, 6.539578, 6.295243, 6.036575, 6.201863, 6.596673});
  p.weight = vec({0.1547, 0.1502, 0.1435, 0.1382, 0.1325, 0.1361, 0.1448});
  p.rank = {1, 2, 4, 5, 7, 6, 3};
  return p;
}

struct Respondent {
  Role role;
  const char* title;
  const char* organization;
};

}  // namespace

const PaperReference& paper_reference() {
  static const PaperReference ref = build();
  return ref;
}

ExpertMatrix paper_expert1() {
  const auto& p = paper_reference();
  return {"R01", p.ids, p.expert1};
}

StudyBundle paper_study_bundle() {
  StudyBundle b;
  b.criteria = {
      {"I1", "Lack of access to technology", Category::Internal, ""},
      {"I2", "Lack of organizational policy", Category::Internal, ""},
      {"I3", "Lack of infrastructure, facilities, and human resources", Category::Internal, ""},
      {"I4", "Lack of financial resources", Category::Internal, ""},
      {"E1", "Lack of regulation and legislation pertaining to donated food",
       Category::External, ""},
      {"E2", "Lack of awareness among volunteers regarding food waste/loss and food bank roles",
       Category::External, ""},
      {"E3", "Lack of government support for implementing blockchain technology",
       Category::External, ""},
  };

  constexpr auto P = Role::Practitioner;
  constexpr auto A = Role::Academic;
  constexpr const char* kNetwork = "The Italian Food Bank Network";
  const Respondent respondents[] = {
      {P, "Reporter in Food Bank Supply chain", kNetwork},
      {P, "Food Bank's Executive Director", kNetwork},
      {P, "Advisor (member of the Board of Directors) of the Food Bank", kNetwork},
      {P, "Technology, IT aspects Expert", kNetwork},
      {P, "Marketing and sales", kNetwork},
      {P, "Advisor for food pantry", kNetwork},
      {P, "Volunteer at the Food Bank", kNetwork},
      {P, "Advisor for Food pantry", kNetwork},
      {P, "Administrative Manager", kNetwork},
      {P, "Administrative employee", kNetwork},
      {P, "Director of food bank", kNetwork},
      {P, "Technology, IT aspects Expert", kNetwork},
      {P, "Advisor for Food pantry", kNetwork},
      {A, "Professor", "Center of Philanthropy & Nonprofit Innovation"},
      {A, "Associate Professor", "Economic"},
      {A, "Doctoral Candidate", "Logistics"},
      {A, "Doctoral Student", "Operations Management"},
      {A, "Doctoral Student", "Economic"},
      {A, "Doctoral student", "Supply chain"},
      {A, "PhD Scholar", "Business Sciences"},
      {A, "Master Student", "Food Industry"},
  };
  int k = 0;
  for (const auto& r : respondents) {
    char id[8];
    std::snprintf(id, sizeof id, "R%02d", ++k);
    b.respondents.push_back({id, r.role, std::string(r.title) + "; " + r.organization});
  }
  b.rough_group = paper_reference().group;
  b.defaults.tau = std::string(to_string(TauStrategy::MaxTotalSum));
  b.defaults.crispify = std::string(to_string(CrispifyMode::Midpoint));
  b.defaults.threshold = ThresholdRule::mean_sigma(1.0).to_string();
  return b;
}

}  // namespace rdematel
