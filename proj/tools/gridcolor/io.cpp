#include "gridcolor/cli.hpp"

#include <iostream>

namespace gridcolor::cli {

std::ifstream open_in(const std::string &path)
{
    std::ifstream in(path);
    if (! in)
        throw InputError("cannot open " + path);
    return in;
}

Output::Output(const std::string &path) :
    out_(&std::cout)
{
    if (path.empty() || path == "-")
        return;
    file_ = std::make_unique<std::ofstream>(path);
    if (! *file_)
        throw InputError("cannot write " + path);
    out_ = file_.get();
}

void print_json(const nlohmann::json &j)
{
    std::cout << j.dump(2) << '\n';
}

} // namespace gridcolor::cli
