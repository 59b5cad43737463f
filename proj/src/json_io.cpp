#include "linform/json_io.hpp"

namespace linform {

namespace {

Json decimal_list(const std::vector<Int>& values)
{
    Json list = Json::array();
    for (const Int& v : values)
        list.push_back(to_decimal(v));
    return list;
}

Json assignment_list(const std::vector<std::vector<Int>>& assignments)
{
    Json list = Json::array();
    for (const auto& assignment : assignments)
        list.push_back(decimal_list(assignment));
    return list;
}

} // namespace

Json to_json(const DigitVector& digits)
{
    Json object = Json::object();
    for (const auto& [position, digit] : digits.digits)
        object[std::to_string(position)] = digit;
    return object;
}

Json to_json(const Representation& rep)
{
    Json object = Json::object();
    for (const auto& entry : rep.entries)
        object[to_decimal(entry.coeff)] = to_decimal(entry.element);
    return object;
}

Json to_json(const CountReport& report)
{
    Json object;
    object["bound"] = to_decimal(report.bound);
    object["unique_checked"] = report.unique_checked;
    object["all_unique"] = report.all_unique;
    if (report.first_deviation) {
        object["first_deviation"] = to_decimal(*report.first_deviation);
        object["first_deviation_count"] = report.first_deviation_count;
    } else {
        object["first_deviation"] = nullptr;
    }
    Json histogram = Json::object();
    for (const auto& [count, total] : report.histogram)
        histogram[std::to_string(count)] = total;
    object["histogram"] = histogram;
    if (report.zero_window) {
        object["zero_window"] =
            Json::array({to_decimal(report.zero_window->first),
                         to_decimal(report.zero_window->second)});
        object["zero_window_ok"] = report.zero_window_ok;
    }
    object["max_sum"] = to_decimal(report.max_sum);
    object["complete"] = report.complete;
    if (!report.witnesses.empty())
        object["witnesses"] = assignment_list(report.witnesses);
    return object;
}

Json to_json(const CollisionWitness& witness)
{
    Json object;
    object["target"] = to_decimal(witness.target);
    object["first"] = decimal_list(witness.first);
    object["second"] = decimal_list(witness.second);
    object["first_support"] = witness.first_support;
    object["second_support"] = witness.second_support;
    return object;
}

Json to_json(const RecognitionResult& result)
{
    Json object;
    object["verdict"] = verdict_name(result.verdict);
    if (result.chain)
        object["chain"] = to_spec_string(*result.chain);
    else
        object["chain"] = nullptr;
    object["confirmed_bound"] = to_decimal(result.confirmed_bound);
    object["reason"] = result.reason;
    return object;
}

Json to_json(const ForcedPrefix& forced)
{
    Json object;
    object["feasible"] = forced.feasible();
    object["bound"] = forced.bound;
    if (forced.feasible()) {
        object["elements"] = decimal_list(forced.elements);
    } else {
        object["failure"] =
            forced.failure == ForcedPrefix::Failure::Collision ? "collision" : "uncovered";
        object["n"] = to_decimal(*forced.bad_n);
        if (!forced.witnesses.empty())
            object["witnesses"] = assignment_list(forced.witnesses);
    }
    return object;
}

Json to_json(const SearchReport& report)
{
    Json object;
    object["candidates"] = report.candidates;
    Json survivors = Json::array();
    for (const auto& entry : report.survivors) {
        Json row;
        row["coeffs"] = decimal_list(entry.coeffs);
        row["elements"] = decimal_list(entry.forced.elements);
        row["verdict"] = verdict_name(entry.result.verdict);
        if (entry.result.chain)
            row["chain"] = to_spec_string(*entry.result.chain);
        else
            row["chain"] = nullptr;
        survivors.push_back(row);
    }
    object["survivors"] = survivors;
    return object;
}

} // namespace linform
