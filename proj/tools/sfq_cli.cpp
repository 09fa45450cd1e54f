// Placeholder main; the real CLI is wired up once the library is complete.
int main() { return 0; }
