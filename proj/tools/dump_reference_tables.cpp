#include "abelcenter/reference_tables.hpp"

#include <json.hpp>

#include <iostream>

using nlohmann::ordered_json;
using namespace abelcenter;

namespace {

ordered_json rows_json(const std::map<int, tables::LinearFormRow>& rows) {
    ordered_json out = ordered_json::array();
    for (const auto& [k, row] : rows) {
        ordered_json entry;
        entry["k"] = k;
        entry["prefactor"] = row.prefactor.to_fraction_string();
        entry["bracket"] = ordered_json::array();
        for (const Rational& c : row.bracket) entry["bracket"].push_back(c.to_fraction_string());
        out.push_back(entry);
    }
    return out;
}

} // namespace

int main() {
    ordered_json doc;
    doc["linear_forms_printed"] = rows_json(tables::printed_L_rows());
    doc["linear_forms_corrected"] = rows_json(tables::corrected_L_rows());

    doc["bilinear_weights"] = ordered_json::array();
    for (const auto& w : tables::system62_weights())
        doc["bilinear_weights"].push_back({{"w1", w.w1.to_fraction_string()},
                                           {"w2", w.w2.to_fraction_string()},
                                           {"k1", w.k1},
                                           {"k2", w.k2}});
    doc["bilinear_scalars"] = ordered_json::array();
    for (const Rational& s : tables::system62_scalars())
        doc["bilinear_scalars"].push_back(s.to_fraction_string());

    doc["reduced_rows_printed"] = ordered_json::array();
    for (const auto& row : tables::printed_system63_rows()) {
        ordered_json jrow = ordered_json::array();
        for (const auto& [kc, c0] : row)
            jrow.push_back({{"K", kc.to_fraction_string()}, {"const", c0.to_fraction_string()}});
        doc["reduced_rows_printed"].push_back(jrow);
    }
    doc["reduced_row_scalars"] = ordered_json::array();
    for (const Rational& s : tables::system63_row_scalars())
        doc["reduced_row_scalars"].push_back(s.to_fraction_string());

    doc["delta1"] = ordered_json::array();
    for (const Rational& c : tables::printed_delta1_coeffs())
        doc["delta1"].push_back(c.to_fraction_string());
    doc["delta2"] = ordered_json::array();
    for (const Rational& c : tables::printed_delta2_coeffs())
        doc["delta2"].push_back(c.to_fraction_string());

    doc["resultant"] = {{"exact", tables::resultant_exact().to_fraction_string()},
                        {"approx", tables::resultant_exact().to_decimal_string(10)},
                        {"printed_decimal", tables::printed_resultant_decimal}};

    doc["route_ratios"] = ordered_json::array();
    for (const auto& r : tables::melnikov_route_ratios()) {
        ordered_json entry;
        entry["k"] = r.k;
        entry["closed_form"] = r.j;
        if (r.has_ratio) {
            entry["ratio"] = r.ratio.to_fraction_string();
            entry["family_only"] = r.family_only;
        } else {
            entry["ratio"] = nullptr;
        }
        doc["route_ratios"].push_back(entry);
    }

    doc["grading_sigma"] = ordered_json::array();
    for (const auto& [k, sigma] : tables::grading_sigma())
        doc["grading_sigma"].push_back({{"k", k}, {"sigma", sigma.to_fraction_string()}});

    std::cout << doc.dump(2) << "\n";
    return 0;
}
