// A short walk through the library: one member of the Hesse pencil, its flexes,
// tangent meeting points, dual curve and an intersection with the cubic C.

#include <hesselab/degeneration.hpp>

#include <iostream>

using namespace hesselab;

int main(int argc, char** argv) {
    PencilParam lambda = parse_pencil_param(argc > 1 ? argv[1] : "2");
    if (is_exceptional(lambda)) {
        std::cerr << "lambda = " << lambda.str() << " is exceptional\n";
        return 2;
    }
    PlaneCurve e = hesse_cubic(lambda);
    std::cout << "E = " << e.str() << "\n";

    std::cout << "flexpoints:";
    for (const auto& p : flexpoints()) std::cout << " " << p.str();
    std::cout << "\n";

    auto arr = flex_meeting_points(lambda);
    std::cout << arr.count() << " points where two flex tangents meet\n";

    auto d = dual_curve(e);
    auto sing = singular_points(d.as_y());
    std::cout << "dual curve has degree " << d.form.total_degree() << " and " << sing.points.size()
              << " rational singular points:\n";
    for (const auto& r : sing.points) std::cout << "  " << r.point.str() << "  " << tag_name(r.tag) << "\n";

    PlaneCurve c(c_form());
    auto meet = intersect(c, e);
    std::cout << "C meets E in total multiplicity " << meet.total() << ", " << meet.points.size()
              << " rational points and " << meet.certificates.size() << " irrational factors\n";
}
