from awmc.cli import main

raise SystemExit(main())
