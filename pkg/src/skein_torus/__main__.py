from skein_torus.cli import main

main()
