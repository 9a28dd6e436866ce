#include "jb/quadrature.hpp"

#include <cmath>
#include <vector>

namespace jb {

namespace {

// Nodes and weights to 34 digits; they round to the nearest double here.
constexpr int kN10 = 10;
constexpr double kX10[kN10] = {
    -0.9739065285171717200779640120844521, -0.865063366688984510732096688423493,
    -0.6794095682990244062343273651148736, -0.4333953941292471907992659431657842,
    -0.14887433898163121088482600112972,   0.14887433898163121088482600112972,
    0.4333953941292471907992659431657842,  0.6794095682990244062343273651148736,
    0.865063366688984510732096688423493,   0.9739065285171717200779640120844521};
constexpr double kW10[kN10] = {
    0.06667134430868813759356880989333179, 0.1494513491505805931457763396576973,
    0.2190863625159820439955349342281632,  0.2692667193099963550912269215694694,
    0.2955242247147528701738929946513383,  0.2955242247147528701738929946513383,
    0.2692667193099963550912269215694694,  0.2190863625159820439955349342281632,
    0.1494513491505805931457763396576973,  0.06667134430868813759356880989333179};

constexpr int kN21 = 21;
constexpr double kX21[kN21] = {
    -0.9937521706203895002602420359379409, -0.9672268385663062943166222149076952,
    -0.9200993341504008287901871337149689, -0.8533633645833172836472506385875677,
    -0.768439963475677908615877851306228,  -0.6671388041974123193059666699903392,
    -0.5516188358872198070590187967243133, -0.4243421202074387835736688885437881,
    -0.2880213168024010966007925160646003, -0.1455618541608950909370309823386863,
    0.0,
    0.1455618541608950909370309823386863,  0.2880213168024010966007925160646003,
    0.4243421202074387835736688885437881,  0.5516188358872198070590187967243133,
    0.6671388041974123193059666699903392,  0.768439963475677908615877851306228,
    0.8533633645833172836472506385875677,  0.9200993341504008287901871337149689,
    0.9672268385663062943166222149076952,  0.9937521706203895002602420359379409};
constexpr double kW21[kN21] = {
    0.01601722825777433332422461685847102, 0.03695378977085249379995066829932967,
    0.05713442542685720828363582647244796, 0.07610011362837930201705165330018318,
    0.09344442345603386155328974111393209, 0.1087972991671483776634745780701056,
    0.1218314160537285341953671771257336,  0.1322689386333374617810525744967756,
    0.1398873947910731547221334238675831,  0.1445244039899700590638271665537525,
    0.1460811336496904271919851476833712,
    0.1445244039899700590638271665537525,  0.1398873947910731547221334238675831,
    0.1322689386333374617810525744967756,  0.1218314160537285341953671771257336,
    0.1087972991671483776634745780701056,  0.09344442345603386155328974111393209,
    0.07610011362837930201705165330018318, 0.05713442542685720828363582647244796,
    0.03695378977085249379995066829932967, 0.01601722825777433332422461685847102};

constexpr int kMaxPanels = 10000;
constexpr int kMaxDepth = 60;

struct Segment {
    double a, b;
    int depth;
};

void pair_eval(const std::function<double(double)>& f, double a, double b, double& i10,
               double& i21) {
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    i10 = 0.0;
    i21 = 0.0;
    for (int i = 0; i < kN10; ++i) i10 += kW10[i] * f(mid + half * kX10[i]);
    for (int i = 0; i < kN21; ++i) i21 += kW21[i] * f(mid + half * kX21[i]);
    i10 *= half;
    i21 *= half;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                     double abs_tol) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    double width = std::fabs(b - a);

    // First pass sets the scale used to split the tolerance across panels.
    double s10, s21;
    pair_eval(f, a, b, s10, s21);
    double scale = std::max(std::fabs(s21), abs_tol);

    std::vector<Segment> stack{{a, b, 0}};
    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        double i10, i21;
        pair_eval(f, seg.a, seg.b, i10, i21);
        ++out.panels;
        double err = std::fabs(i21 - i10);
        double budget =
            std::max(abs_tol, rel_tol * scale) * (std::fabs(seg.b - seg.a) / width);
        bool capped = seg.depth >= kMaxDepth || out.panels + (int)stack.size() >= kMaxPanels;
        if (err <= budget || capped || !std::isfinite(err)) {
            out.value += i21;
            out.err_estimate += err;
        } else {
            double mid = 0.5 * (seg.a + seg.b);
            stack.push_back({seg.a, mid, seg.depth + 1});
            stack.push_back({mid, seg.b, seg.depth + 1});
        }
    }
    out.converged = std::isfinite(out.value) &&
                    out.err_estimate <= std::max(abs_tol, rel_tol * std::fabs(out.value)) * 1.01;
    return out;
}

}  // namespace jb
