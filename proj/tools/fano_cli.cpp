#include <cstdio>

int main() {
    std::puts("fano_cli: not wired up yet");
    return 1;
}
